"""Sparse polynomials over an exact field.

A ``Polynomial`` is an immutable tuple of ``(coefficient, monomial)`` terms
kept strictly descending under the context's monomial order, with no zero
coefficients and no repeated monomials. The zero polynomial has no terms.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Any, Iterable, Iterator, Optional

from .errors import ContextMismatchError, FieldMismatchError, NoHeadTermError
from .monomials import Monomial

if TYPE_CHECKING:
    from .context import ComputationContext

Term = tuple[Any, Monomial]


class Polynomial:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "ComputationContext", terms: tuple[Term, ...] = ()):
        # Callers pass canonical terms; use from_terms for anything else.
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_terms(cls, ctx: "ComputationContext", terms: Iterable[tuple[Any, Any]]) -> Polynomial:
        field = ctx.field
        merged: dict[Monomial, Any] = {}
        for coefficient, monomial in terms:
            if not isinstance(monomial, Monomial):
                monomial = Monomial(monomial)
            if len(monomial) != ctx.variable_count:
                raise ContextMismatchError(
                    f"{monomial!r} does not have {ctx.variable_count} variables"
                )
            value = field.convert(coefficient)
            if monomial in merged:
                value = field.add(merged[monomial], value)
            merged[monomial] = value
        return cls(ctx, _sorted_terms(ctx, merged))

    @classmethod
    def zero(cls, ctx: "ComputationContext") -> Polynomial:
        return cls(ctx, ())

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    @property
    def head_coefficient(self) -> Any:
        return poly_head(self)[0]

    @property
    def head_monomial(self) -> Monomial:
        return poly_head(self)[1]

    @property
    def second_monomial(self) -> Optional[Monomial]:
        """Largest monomial below the head, or ``None`` for zero and single terms."""
        if len(self.terms) < 2:
            return None
        return self.terms[1][1]

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(monomial for _, monomial in self.terms)

    def coefficient(self, monomial: Monomial) -> Any:
        for coefficient, candidate in self.terms:
            if candidate == monomial:
                return coefficient
        return self.ctx.field.zero

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(monomial.degree for _, monomial in self.terms)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.ctx.field.is_one(self.terms[0][0])

    def is_canonical(self) -> bool:
        field = self.ctx.field
        key = self.ctx.order.key
        seen = set()
        previous = None
        for coefficient, monomial in self.terms:
            if field.is_zero(coefficient) or not field.is_canonical(coefficient):
                return False
            if monomial in seen or len(monomial) != self.ctx.variable_count:
                return False
            if previous is not None and not key(monomial) < key(previous):
                return False
            seen.add(monomial)
            previous = monomial
        return True

    # -- arithmetic -------------------------------------------------------

    def scaled(self, c: Any) -> Polynomial:
        field = self.ctx.field
        if field.is_zero(c):
            return Polynomial.zero(self.ctx)
        self.ctx.counter.charge(len(self.terms))
        return Polynomial(
            self.ctx, tuple((field.mul(c, coefficient), m) for coefficient, m in self.terms)
        )

    def monic(self) -> Polynomial:
        if not self.terms or self.is_monic():
            return self
        field = self.ctx.field
        self.ctx.counter.charge(1)
        return self.scaled(field.inv(self.terms[0][0]))

    def shifted(self, u: Monomial) -> Polynomial:
        """``u * self``; multiplication by a monomial preserves term order."""
        return Polynomial(self.ctx, tuple((c, m * u) for c, m in self.terms))

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add_scaled(self, self.ctx.field.one, Monomial.one(self.ctx.variable_count), other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        field = self.ctx.field
        return poly_add_scaled(self, field.neg(field.one), Monomial.one(self.ctx.variable_count), other)

    def __neg__(self) -> Polynomial:
        field = self.ctx.field
        return Polynomial(self.ctx, tuple((field.neg(c), m) for c, m in self.terms))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx.ring_key == other.ctx.ring_key and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx.ring_key, self.terms))

    def __str__(self) -> str:
        return self.ctx.format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.ctx.format_polynomial(self)!r})"


def _sorted_terms(ctx: "ComputationContext", merged: dict[Monomial, Any]) -> tuple[Term, ...]:
    field = ctx.field
    key = ctx.order.key
    live = [(m, c) for m, c in merged.items() if not field.is_zero(c)]
    live.sort(key=lambda item: key(item[0]), reverse=True)
    return tuple((c, m) for m, c in live)


def check_same_ring(a: Polynomial, b: Polynomial) -> None:
    if a.ctx is b.ctx:
        return
    if a.ctx.field != b.ctx.field:
        raise FieldMismatchError(
            f"cannot combine polynomials over {a.ctx.field.descriptor} and {b.ctx.field.descriptor}"
        )
    if a.ctx.ring_key != b.ctx.ring_key:
        raise ContextMismatchError("polynomials belong to different computation contexts")


def poly_head(f: Polynomial) -> tuple[Any, Monomial]:
    """Return ``(HC, HT)`` of ``f``."""
    if not f.terms:
        raise NoHeadTermError("the zero polynomial has no head term")
    return f.terms[0]


def poly_add_scaled(h: Polynomial, c: Any, u: Monomial, f: Polynomial) -> Polynomial:
    """Return ``h + c * u * f`` in canonical form, charging the field operations."""
    check_same_ring(h, f)
    ctx = h.ctx
    field = ctx.field
    if field.is_zero(c) or not f.terms:
        return h
    merged: dict[Monomial, Any] = {m: coefficient for coefficient, m in h.terms}
    ops = 0
    for coefficient, m in f.terms:
        monomial = m * u
        product = field.mul(c, coefficient)
        ops += 1
        if monomial in merged:
            merged[monomial] = field.add(merged[monomial], product)
            ops += 1
        else:
            merged[monomial] = product
    ctx.counter.charge(ops)
    return Polynomial(ctx, _sorted_terms(ctx, merged))
