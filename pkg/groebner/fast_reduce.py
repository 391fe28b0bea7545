"""Reducer selection by smallest shifted second monomial.

Reducing ``h`` by ``u * f`` leaves a head no larger than the bigger of
``h``'s second monomial and ``u * t2(f)``. Among all basis elements whose
head divides ``HT(h)``, ``reduction_sequence`` picks the one minimizing
``u * t2(f)`` so the head drops as far as possible per step.
"""
from __future__ import annotations

import enum
import logging
from typing import Callable, Optional, Sequence

from algebra.monomials import Monomial, monomial_div
from algebra.orders import MonomialOrder
from algebra.polynomials import Polynomial, poly_add_scaled

from .errors import InvariantViolation
from .signatures import SignatureOrder, SignedPolynomial, is_admissible_reducer

logger = logging.getLogger(__name__)


class ReductionMode(str, enum.Enum):
    SAFE = "safe"
    LITERAL = "literal"


class _AbsentTerm:
    """Second monomial of a single-term polynomial; sorts below every monomial."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ABSENT"


ABSENT = _AbsentTerm()

_ABSENT_KEY = (0,)


class ReducerTable:
    """Head and second monomial of each basis element, in basis order.

    Zero polynomials keep their slot (``None``) so positions line up with
    the basis they describe.
    """

    def __init__(self, order: MonomialOrder):
        self.order = order
        self._entries: list[Optional[tuple[Monomial, object]]] = []

    @classmethod
    def from_polynomials(cls, order: MonomialOrder, polynomials: Sequence[Polynomial]) -> ReducerTable:
        table = cls(order)
        table.extend(polynomials)
        return table

    def append(self, polynomial: Polynomial) -> None:
        if polynomial.is_zero():
            self._entries.append(None)
            return
        second = polynomial.second_monomial
        self._entries.append((polynomial.head_monomial, ABSENT if second is None else second))

    def extend(self, polynomials: Sequence[Polynomial]) -> None:
        for polynomial in polynomials:
            self.append(polynomial)

    def head(self, position: int) -> Optional[Monomial]:
        entry = self._entries[position]
        return None if entry is None else entry[0]

    def second(self, position: int):
        entry = self._entries[position]
        return None if entry is None else entry[1]

    def shifted_second_key(self, position: int, u: Monomial) -> tuple:
        """Sort key of ``u * t2``; ``ABSENT`` is below every monomial."""
        second = self._entries[position][1]
        if second is ABSENT:
            return _ABSENT_KEY
        return (1, self.order.key(second * u))

    def __len__(self) -> int:
        return len(self._entries)


def reduction_sequence(
    h: Polynomial,
    basis: Sequence[Polynomial],
    table: Optional[ReducerTable] = None,
    *,
    admissible: Optional[Callable[[int, Monomial], bool]] = None,
) -> int:
    """1-based index of the reducer minimizing ``u * t2``, or 0 when none applies.

    Ties keep the earliest index. ``admissible(position, u)`` may veto a
    candidate (``position`` is 0-based).
    """
    if table is None:
        table = ReducerTable.from_polynomials(h.ctx.order, basis)
    elif len(table) < len(basis):
        table.extend(basis[len(table):])
    head = h.head_monomial
    best_index = 0
    best_key = (1, table.order.key(head))
    for position in range(len(basis)):
        reducer_head = table.head(position)
        if reducer_head is None:
            continue
        u = monomial_div(head, reducer_head)
        if u is None:
            continue
        if admissible is not None and not admissible(position, u):
            continue
        candidate = table.shifted_second_key(position, u)
        if candidate < best_key:
            best_key = candidate
            best_index = position + 1
    return best_index


def s_poly_reduction(
    sp: SignedPolynomial,
    basis: Sequence[SignedPolynomial],
    mode: ReductionMode = ReductionMode.SAFE,
    *,
    table: Optional[ReducerTable] = None,
) -> SignedPolynomial:
    """Top-reduce ``sp`` by ``basis`` choosing reducers with ``reduction_sequence``.

    ``SAFE`` only admits reducers an F5 reduction would accept and keeps the
    signature of ``sp``. ``LITERAL`` admits every reducer; when the shifted
    reducer's signature is not below the working one, the result takes the
    larger signature and ``signature_drift`` is counted. Steps with more
    than one admissible reducer are counted as ``reducer_choices``.
    """
    mode = ReductionMode(mode)
    ctx = sp.poly.ctx
    field = ctx.field
    counter = ctx.counter
    key = ctx.order.key
    signature_order = SignatureOrder(ctx.order)
    polynomials = [member.poly for member in basis]
    if table is None:
        table = ReducerTable.from_polynomials(ctx.order, polynomials)
    current = sp
    while not current.poly.is_zero():
        h = current.poly
        target = current.signature
        admitted = 0

        def admissible(position: int, u: Monomial) -> bool:
            nonlocal admitted
            if mode is ReductionMode.SAFE and not is_admissible_reducer(
                target, basis[position], u, basis, signature_order
            ):
                return False
            admitted += 1
            return True

        k = reduction_sequence(h, polynomials, table, admissible=admissible)
        if k == 0:
            break
        if admitted > 1:
            counter.record("reducer_choices")
        reducer = basis[k - 1]
        head = h.head_monomial
        u = monomial_div(head, reducer.poly.head_monomial)
        counter.charge(1)
        factor = field.neg(field.div(h.head_coefficient, reducer.poly.head_coefficient))
        reduced = poly_add_scaled(h, factor, u, reducer.poly)
        counter.record("reduction_steps")
        _check_step(h, reduced, table, k - 1, u, key)

        signature = current.signature
        if mode is ReductionMode.LITERAL:
            shifted = reducer.signature * u
            if not signature_order.less(shifted, signature):
                counter.record("signature_drift")
                signature = signature_order.max(signature, shifted)
        current = SignedPolynomial(signature, reduced)
    return current


def _check_step(before: Polynomial, after: Polynomial, table: ReducerTable, position: int, u: Monomial, key) -> None:
    if after.is_zero():
        return
    new_head = key(after.head_monomial)
    if not new_head < key(before.head_monomial):
        raise InvariantViolation("fast reduction step did not lower the head term")
    bounds = []
    if before.second_monomial is not None:
        bounds.append(key(before.second_monomial))
    second = table.second(position)
    if second is not ABSENT:
        bounds.append(key(second * u))
    if not bounds or new_head > max(bounds):
        raise InvariantViolation("head after a fast reduction step exceeds max(h2, u*t2)")


def fast_strategy(polynomials: Sequence[Polynomial], **options) -> list[Polynomial]:
    """F5B with ``s_poly_reduction`` in place of F5 reduction."""
    from .f5b import ReductionStrategy, f5b_basis

    return f5b_basis(polynomials, ReductionStrategy.FAST, **options)
