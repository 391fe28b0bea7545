from __future__ import annotations

from typing import Iterable, Optional

from .errors import ContextMismatchError, DomainError


class Monomial:
    """An exponent vector over a fixed number of variables.

    Instances are immutable and hashable; ``degree`` caches the total degree.
    """

    __slots__ = ("exponents", "degree", "_hash")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, variable_count: int) -> Monomial:
        return cls((0,) * variable_count)

    @classmethod
    def variable(cls, index: int, variable_count: int) -> Monomial:
        exps = [0] * variable_count
        exps[index] = 1
        return cls(exps)

    @property
    def variable_count(self) -> int:
        return len(self.exponents)

    def is_one(self) -> bool:
        return self.degree == 0

    def divides(self, other: Monomial) -> bool:
        _check_same_length(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return monomial_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def _check_same_length(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise ContextMismatchError(
            f"monomials over {len(a.exponents)} and {len(b.exponents)} variables cannot be combined"
        )


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_same_length(a, b)
    return Monomial(x + y for x, y in zip(a.exponents, b.exponents))


def monomial_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Return ``a / b``, or ``None`` when ``b`` does not divide ``a``."""
    _check_same_length(a, b)
    quotient = []
    for x, y in zip(a.exponents, b.exponents):
        if x < y:
            return None
        quotient.append(x - y)
    return Monomial(quotient)


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same_length(a, b)
    return Monomial(max(x, y) for x, y in zip(a.exponents, b.exponents))
