"""Signatures and signed polynomials for the signature-based algorithms.

A signature ``u * e_i`` records that a polynomial arose from the i-th input
generator multiplied by the monomial ``u`` plus combinations of smaller
signatures. Signatures compare position over term: a larger generator index
is a larger signature, and equal indices fall back to the monomial order.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional, Sequence

from algebra.monomials import Monomial
from algebra.orders import MonomialOrder, Ordering
from algebra.polynomials import Polynomial

if TYPE_CHECKING:
    from algebra.context import ComputationContext


@dataclass(frozen=True)
class Signature:
    index: int
    monomial: Monomial

    def __mul__(self, u: Monomial) -> Signature:
        return Signature(self.index, self.monomial * u)

    def format(self, ctx: "ComputationContext") -> str:
        if self.monomial.is_one():
            return f"e{self.index}"
        return f"{ctx.format_monomial(self.monomial)}*e{self.index}"


@dataclass(frozen=True)
class SignatureOrder:
    order: MonomialOrder

    def key(self, signature: Signature) -> tuple:
        return (signature.index, self.order.key(signature.monomial))

    def compare(self, a: Signature, b: Signature) -> Ordering:
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Ordering.EQUAL
        return Ordering.GREATER if ka > kb else Ordering.LESS

    def less(self, a: Signature, b: Signature) -> bool:
        return self.key(a) < self.key(b)

    def max(self, a: Signature, b: Signature) -> Signature:
        return b if self.key(a) < self.key(b) else a


@dataclass(frozen=True, eq=False)
class SignedPolynomial:
    """A polynomial labelled with its signature.

    ``birth`` is assigned when the polynomial joins a basis and orders basis
    members by creation; working polynomials carry ``None``.
    """

    signature: Signature
    poly: Polynomial
    birth: Optional[int] = None

    @property
    def index(self) -> int:
        return self.signature.index

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def born(self, stamp: int) -> SignedPolynomial:
        return replace(self, birth=stamp)

    def with_poly(self, poly: Polynomial) -> SignedPolynomial:
        return SignedPolynomial(self.signature, poly, None)

    def __repr__(self) -> str:
        ctx = self.poly.ctx
        return f"({self.signature.format(ctx)}, {ctx.format_polynomial(self.poly)})"


@dataclass(frozen=True, eq=False)
class CriticalPair:
    """``[u, first, v, second]`` with ``lcm = u * HT(first) = v * HT(second)``."""

    lcm: Monomial
    u: Monomial
    first: SignedPolynomial
    v: Monomial
    second: SignedPolynomial

    @property
    def first_signature(self) -> Signature:
        return self.first.signature * self.u

    @property
    def second_signature(self) -> Signature:
        return self.second.signature * self.v

    def components(self) -> tuple[tuple[Signature, SignedPolynomial], ...]:
        return (
            (self.first_signature, self.first),
            (self.second_signature, self.second),
        )


def is_divisible(signature: Signature, basis: Sequence[SignedPolynomial]) -> bool:
    """A lower-index basis head divides the signature monomial (principal syzygy)."""
    for member in basis:
        if member.index >= signature.index or member.poly.is_zero():
            continue
        if member.poly.head_monomial.divides(signature.monomial):
            return True
    return False


def is_rewritable(
    signature: Signature, owner: SignedPolynomial, basis: Sequence[SignedPolynomial]
) -> bool:
    """A basis member born after ``owner`` has a signature dividing ``signature``.

    ``owner`` itself and the other half of a pair are part of the scan.
    """
    for member in basis:
        if member.index != signature.index:
            continue
        if member.birth is None or owner.birth is None or member.birth <= owner.birth:
            continue
        if member.signature.monomial.divides(signature.monomial):
            return True
    return False


def is_admissible_reducer(
    target: Signature,
    reducer: SignedPolynomial,
    u: Monomial,
    basis: Sequence[SignedPolynomial],
    signature_order: SignatureOrder,
) -> bool:
    """``u * reducer`` may reduce a polynomial with signature ``target``.

    The shifted signature must be strictly smaller than ``target`` and
    neither divisible nor rewritable by the basis.
    """
    shifted = reducer.signature * u
    if not signature_order.less(shifted, target):
        return False
    if is_divisible(shifted, basis):
        return False
    return not is_rewritable(shifted, reducer, basis)
