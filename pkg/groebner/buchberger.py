"""Buchberger's algorithm with plain normal-form reduction.

Pairs are taken smallest lcm first and reducers are tried in basis order;
no pair criteria are applied. ``is_groebner`` and ``reduce_basis`` are the
reference checks the signature-based algorithms are compared against.
"""
from __future__ import annotations

import heapq
import logging
from typing import Iterable, Optional, Sequence

from algebra.counting import CANONICALIZE_PHASE, VALIDATION_PHASE
from algebra.errors import DomainError
from algebra.monomials import Monomial, monomial_div, monomial_lcm
from algebra.orders import MonomialOrder
from algebra.polynomials import Polynomial, check_same_ring, poly_add_scaled, poly_head

from .errors import ComputationLimitExceeded, InvariantViolation

logger = logging.getLogger(__name__)


class PairQueue:
    """Pending index pairs ``{i, j}`` keyed by the lcm of their heads."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self._heap: list[tuple[tuple, int, int]] = []
        self._seen: set[tuple[int, int]] = set()

    def push(self, i: int, j: int, lcm: Monomial) -> None:
        if i == j:
            raise InvariantViolation(f"pair {{{i}, {i}}} pairs an element with itself")
        i, j = min(i, j), max(i, j)
        if (i, j) in self._seen:
            raise InvariantViolation(f"pair {{{i}, {j}}} queued twice")
        self._seen.add((i, j))
        heapq.heappush(self._heap, (self.order.key(lcm), i, j))

    def pop(self) -> tuple[int, int]:
        _, i, j = heapq.heappop(self._heap)
        return i, j

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


def scaled_difference(f: Polynomial, u: Monomial, g: Polynomial, v: Monomial) -> Polynomial:
    """``HC(g) * u * f - HC(f) * v * g``."""
    field = f.ctx.field
    combination = poly_add_scaled(Polynomial.zero(f.ctx), g.head_coefficient, u, f)
    return poly_add_scaled(combination, field.neg(f.head_coefficient), v, g)


def spol(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise DomainError("the S-polynomial of a zero polynomial is undefined")
    check_same_ring(f, g)
    lcm = monomial_lcm(f.head_monomial, g.head_monomial)
    return scaled_difference(f, monomial_div(lcm, f.head_monomial), g, monomial_div(lcm, g.head_monomial))


def _first_reducer(head: Monomial, reducers: Sequence[Polynomial]) -> Optional[tuple[Polynomial, Monomial]]:
    for reducer in reducers:
        u = monomial_div(head, reducer.head_monomial)
        if u is not None:
            return reducer, u
    return None


def normal_form(h: Polynomial, basis: Sequence[Polynomial], *, top_only: bool = False) -> Polynomial:
    """Reduce ``h`` by ``basis``; ``top_only`` stops once the head is irreducible."""
    ctx = h.ctx
    field = ctx.field
    key = ctx.order.key
    reducers = [g for g in basis if not g.is_zero()]
    for reducer in reducers:
        check_same_ring(h, reducer)
    remainder: list = []
    current = h
    while current.terms:
        coefficient, head = poly_head(current)
        found = _first_reducer(head, reducers)
        if found is None:
            if top_only:
                break
            remainder.append(current.terms[0])
            current = Polynomial(ctx, current.terms[1:])
            continue
        reducer, u = found
        ctx.counter.charge(1)
        factor = field.neg(field.div(coefficient, reducer.head_coefficient))
        reduced = poly_add_scaled(current, factor, u, reducer)
        ctx.counter.record("reduction_steps")
        if reduced.terms and not key(reduced.head_monomial) < key(head):
            raise InvariantViolation("reduction step did not lower the head term")
        current = reduced
    return Polynomial(ctx, tuple(remainder) + current.terms)


def _prepare(polynomials: Iterable[Polynomial]) -> list[Polynomial]:
    generators = [p for p in polynomials if not p.is_zero()]
    if not generators:
        raise DomainError("a basis needs at least one non-zero generator")
    for other in generators[1:]:
        check_same_ring(generators[0], other)
    return generators


def buchberger_basis(
    polynomials: Iterable[Polynomial], *, max_pairs: Optional[int] = None
) -> list[Polynomial]:
    basis = _prepare(polynomials)
    ctx = basis[0].ctx
    counter = ctx.counter
    queue = PairQueue(ctx.order)

    def add_pairs(new_index: int) -> None:
        for i in range(new_index):
            queue.push(i, new_index, monomial_lcm(basis[i].head_monomial, basis[new_index].head_monomial))
            counter.record("pairs_generated")

    for j in range(1, len(basis)):
        add_pairs(j)

    processed = 0
    while queue:
        i, j = queue.pop()
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise ComputationLimitExceeded(max_pairs, processed)
        with counter.phase("spol"):
            s = spol(basis[i], basis[j])
        with counter.phase("reduction"):
            h = normal_form(s, basis)
        if h.is_zero():
            counter.record("reduced_to_zero")
            logger.debug("pair (%d, %d) reduced to zero", i, j)
            continue
        counter.record("basis_contributing")
        basis.append(h)
        logger.debug("pair (%d, %d) added basis element %d: %s", i, j, len(basis) - 1, h)
        add_pairs(len(basis) - 1)
    logger.debug("buchberger finished: %d elements, %d pairs", len(basis), processed)
    return basis


def minimalize(basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop members whose head is divisible by the head of another member."""
    if not basis:
        return []
    key = basis[0].ctx.order.key
    kept: list[Polynomial] = []
    for f in sorted(basis, key=lambda p: key(p.head_monomial)):
        if all(not g.head_monomial.divides(f.head_monomial) for g in kept):
            kept.append(f)
    return kept


def interreduce(basis: Sequence[Polynomial]) -> list[Polynomial]:
    reduced = []
    for position, f in enumerate(basis):
        others = [g for k, g in enumerate(basis) if k != position]
        reduced.append(normal_form(f, others).monic())
    return reduced


def reduce_basis(basis: Iterable[Polynomial]) -> list[Polynomial]:
    """The reduced Gröbner basis of a Gröbner basis, sorted by descending head."""
    members = [g for g in basis if not g.is_zero()]
    if not members:
        return []
    ctx = members[0].ctx
    key = ctx.order.key
    with ctx.counter.phase(CANONICALIZE_PHASE):
        reduced = interreduce(minimalize(members))
    return sorted(reduced, key=lambda p: key(p.head_monomial), reverse=True)


def is_groebner(basis: Iterable[Polynomial]) -> bool:
    members = [g for g in basis if not g.is_zero()]
    if not members:
        return True
    with members[0].ctx.counter.phase(VALIDATION_PHASE):
        for j in range(1, len(members)):
            for i in range(j):
                if not normal_form(spol(members[i], members[j]), members).is_zero():
                    return False
    return True
