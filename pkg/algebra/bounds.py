from __future__ import annotations

from math import comb
from typing import Sequence

from .errors import DomainError
from .polynomials import Polynomial


def count_monomials(degree: int, variable_count: int) -> int:
    """Number of monomials of total degree at most ``degree`` in ``variable_count`` variables."""
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    if variable_count < 1:
        raise DomainError(f"need at least one variable, got {variable_count}")
    return comb(variable_count + degree, variable_count)


def degree_bound_from_degrees(max_degree: int, min_degree: int) -> int:
    if min_degree < 0 or max_degree < min_degree:
        raise DomainError(f"invalid degree range {min_degree}..{max_degree}")
    return (8 * max_degree + 1) * 2**min_degree


def degree_bound(polynomials: Sequence[Polynomial]) -> int:
    """Upper bound on the degree of Gröbner basis elements of ``polynomials``.

    ``(8 * max_deg + 1) * 2 ** min_deg`` over the total degrees of the inputs.
    """
    if not polynomials:
        raise DomainError("degree bound of an empty system")
    if any(p.is_zero() for p in polynomials):
        raise DomainError("degree bound is undefined for a zero generator")
    degrees = [p.total_degree for p in polynomials]
    return degree_bound_from_degrees(max(degrees), min(degrees))
