"""F5B: the F5 signature criteria inside a Buchberger-style pair loop.

Every input generator ``f_i`` starts as ``(e_i, f_i)``. Critical pairs are
discarded when either half is divisible (a principal syzygy covers it) or
rewritable (a later basis member has a dividing signature). Surviving
S-polynomials are reduced without raising their signature and appended to
the basis; zero results stay in the basis for the rewritten check but are
left out of the returned polynomials.
"""
from __future__ import annotations

import enum
import heapq
import itertools
import logging
from typing import Iterable, Optional, Sequence

from algebra.errors import DomainError
from algebra.monomials import monomial_div, monomial_lcm
from algebra.polynomials import Polynomial, check_same_ring, poly_add_scaled

from .buchberger import scaled_difference
from .errors import ComputationLimitExceeded, InvariantViolation, SignatureCollisionError
from .fast_reduce import ReducerTable, ReductionMode, s_poly_reduction
from .signatures import (
    CriticalPair,
    Signature,
    SignatureOrder,
    SignedPolynomial,
    is_admissible_reducer,
    is_divisible,
    is_rewritable,
)

logger = logging.getLogger(__name__)


class ReductionStrategy(str, enum.Enum):
    F5 = "f5"
    FAST = "fast"


class PairSelection(str, enum.Enum):
    NORMAL = "normal"
    SIGNATURE = "signature"


def make_critical_pair(first: SignedPolynomial, second: SignedPolynomial) -> CriticalPair:
    if first.is_zero() or second.is_zero():
        raise DomainError("critical pairs need non-zero polynomials")
    lcm = monomial_lcm(first.poly.head_monomial, second.poly.head_monomial)
    return CriticalPair(
        lcm=lcm,
        u=monomial_div(lcm, first.poly.head_monomial),
        first=first,
        v=monomial_div(lcm, second.poly.head_monomial),
        second=second,
    )


def syzygy_criterion(cp: CriticalPair, basis: Sequence[SignedPolynomial]) -> bool:
    return any(is_divisible(signature, basis) for signature, _ in cp.components())


def rewritten_criterion(cp: CriticalPair, basis: Sequence[SignedPolynomial]) -> bool:
    # The pair's own members take part, so equal shifted signatures are
    # always caught here: the younger member rewrites the older one.
    return any(is_rewritable(signature, owner, basis) for signature, owner in cp.components())


def spol_signed(cp: CriticalPair) -> SignedPolynomial:
    signature_order = SignatureOrder(cp.first.poly.ctx.order)
    left, right = cp.first_signature, cp.second_signature
    if left == right:
        raise SignatureCollisionError(
            f"both halves of the pair have signature {left.format(cp.first.poly.ctx)}"
        )
    poly = scaled_difference(cp.first.poly, cp.u, cp.second.poly, cp.v)
    return SignedPolynomial(signature_order.max(left, right), poly)


def f5_reduction_step(
    target: SignedPolynomial, basis: Sequence[SignedPolynomial]
) -> tuple[list[SignedPolynomial], list[SignedPolynomial]]:
    """One F5 reduction of ``target``: ``([target], [])`` or ``([], [target - v*G])``.

    ``G`` is the first basis member whose head divides the head of
    ``target`` with ``v * G`` admissible (smaller signature, neither
    divisible nor rewritable).
    """
    if target.is_zero():
        return [target], []
    poly = target.poly
    ctx = poly.ctx
    signature_order = SignatureOrder(ctx.order)
    head = poly.head_monomial
    for reducer in basis:
        if reducer.is_zero():
            continue
        v = monomial_div(head, reducer.poly.head_monomial)
        if v is None:
            continue
        if not is_admissible_reducer(target.signature, reducer, v, basis, signature_order):
            continue
        field = ctx.field
        ctx.counter.charge(1)
        factor = field.neg(field.div(poly.head_coefficient, reducer.poly.head_coefficient))
        reduced = poly_add_scaled(poly, factor, v, reducer.poly)
        ctx.counter.record("reduction_steps")
        return [], [target.with_poly(reduced)]
    return [target], []


def reduction(
    todo: Iterable[SignedPolynomial], basis: Sequence[SignedPolynomial]
) -> list[SignedPolynomial]:
    """Drain ``todo`` smallest signature first through ``f5_reduction_step``."""
    pending = list(todo)
    done: list[SignedPolynomial] = []
    if not pending:
        return done
    signature_order = SignatureOrder(pending[0].poly.ctx.order)
    previous: Optional[Signature] = None
    while pending:
        position = min(range(len(pending)), key=lambda k: signature_order.key(pending[k].signature))
        current = pending.pop(position)
        if previous is not None and signature_order.less(current.signature, previous):
            raise InvariantViolation("signatures taken from todo decreased")
        previous = current.signature
        finished, requeued = f5_reduction_step(current, basis)
        for item in requeued:
            if item.signature != current.signature:
                raise InvariantViolation("F5 reduction changed a signature")
        done.extend(finished)
        pending.extend(requeued)
    return done


class F5BComputation:
    """State of one F5B run: the signed basis, its reducer table and the pair queue."""

    def __init__(
        self,
        polynomials: Iterable[Polynomial],
        *,
        strategy: ReductionStrategy = ReductionStrategy.F5,
        mode: ReductionMode = ReductionMode.SAFE,
        selection: PairSelection = PairSelection.NORMAL,
        max_pairs: Optional[int] = None,
        record_discards: bool = False,
    ):
        generators = list(polynomials)
        if not generators:
            raise DomainError("F5B needs at least one generator")
        if any(p.is_zero() for p in generators):
            raise DomainError("F5B generators must be non-zero")
        for other in generators[1:]:
            check_same_ring(generators[0], other)
        self.ctx = generators[0].ctx
        self.strategy = ReductionStrategy(strategy)
        self.mode = ReductionMode(mode)
        self.selection = PairSelection(selection)
        self.max_pairs = max_pairs
        self.signature_order = SignatureOrder(self.ctx.order)
        self.basis: list[SignedPolynomial] = []
        self.table = ReducerTable(self.ctx.order)
        self.processed = 0
        self.record_discards = record_discards
        self.discarded: list[tuple[str, CriticalPair]] = []
        self._births = itertools.count(1)
        self._sequence = itertools.count()
        self._pairs: list[tuple[tuple, int, CriticalPair]] = []

        one = self.ctx.one()
        for index, poly in enumerate(generators, start=1):
            self._append(SignedPolynomial(Signature(index, one), poly))
        for j in range(1, len(self.basis)):
            for i in range(j):
                self._push(make_critical_pair(self.basis[i], self.basis[j]))

    def _append(self, member: SignedPolynomial) -> SignedPolynomial:
        member = member.born(next(self._births))
        self.basis.append(member)
        self.table.append(member.poly)
        return member

    def _pair_key(self, cp: CriticalPair) -> tuple:
        births = tuple(sorted((cp.first.birth, cp.second.birth)))
        if self.selection is PairSelection.SIGNATURE:
            top = self.signature_order.max(cp.first_signature, cp.second_signature)
            return (self.signature_order.key(top), births)
        return (cp.lcm.degree, self.ctx.order.key(cp.lcm), births)

    def _push(self, cp: CriticalPair) -> None:
        heapq.heappush(self._pairs, (self._pair_key(cp), next(self._sequence), cp))
        self.ctx.counter.record("pairs_generated")

    def _discard(self, reason: str, cp: CriticalPair) -> None:
        if self.record_discards:
            self.discarded.append((reason, cp))

    def _reduce(self, sp: SignedPolynomial) -> SignedPolynomial:
        if self.strategy is ReductionStrategy.FAST:
            return s_poly_reduction(sp, self.basis, self.mode, table=self.table)
        done = reduction([sp], self.basis)
        if len(done) != 1:
            raise InvariantViolation(f"reduction returned {len(done)} polynomials for one S-polynomial")
        return done[0]

    def run(self) -> list[Polynomial]:
        counter = self.ctx.counter
        while self._pairs:
            _, _, cp = heapq.heappop(self._pairs)
            self.processed += 1
            if self.max_pairs is not None and self.processed > self.max_pairs:
                raise ComputationLimitExceeded(self.max_pairs, self.processed)
            with counter.phase("criteria"):
                if syzygy_criterion(cp, self.basis):
                    counter.record("discarded_syzygy")
                    self._discard("syzygy", cp)
                    logger.debug("pair at %s discarded by the syzygy criterion", cp.lcm)
                    continue
                if rewritten_criterion(cp, self.basis):
                    counter.record("discarded_rewritten")
                    self._discard("rewritten", cp)
                    logger.debug("pair at %s discarded by the rewritten criterion", cp.lcm)
                    continue
            with counter.phase("spol"):
                sp = spol_signed(cp)
            with counter.phase("reduction"):
                result = self._reduce(sp)
            if result.is_zero():
                counter.record("reduced_to_zero")
                self._append(result)
                continue
            counter.record("basis_contributing")
            added = self._append(result)
            for member in self.basis[:-1]:
                if not member.is_zero():
                    self._push(make_critical_pair(added, member))
            logger.debug("basis element %d: %r", added.birth, added)
        logger.debug(
            "f5b (%s) finished: %d members, %d pairs", self.strategy.value, len(self.basis), self.processed
        )
        return self.polynomials()

    def polynomials(self) -> list[Polynomial]:
        return [member.poly for member in self.basis if not member.is_zero()]


def f5b_basis(
    polynomials: Iterable[Polynomial],
    strategy: ReductionStrategy = ReductionStrategy.F5,
    *,
    mode: ReductionMode = ReductionMode.SAFE,
    selection: PairSelection = PairSelection.NORMAL,
    max_pairs: Optional[int] = None,
) -> list[Polynomial]:
    return F5BComputation(
        polynomials, strategy=strategy, mode=mode, selection=selection, max_pairs=max_pairs
    ).run()
