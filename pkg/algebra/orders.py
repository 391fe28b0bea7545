from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatchError, DomainError
from .monomials import Monomial


class OrderKind(str, enum.Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@lru_cache(maxsize=1 << 16)
def _sort_key(kind: OrderKind, exponents: tuple[int, ...]) -> tuple:
    if kind is OrderKind.LEX:
        return exponents
    if kind is OrderKind.GRLEX:
        return (sum(exponents), exponents)
    # Ties on degree go to the monomial with the smaller trailing exponent.
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order on monomials in ``variable_count`` variables.

    Variables are ranked in declaration order, so ``x_1 > x_2 > ... > x_n``.
    """

    kind: OrderKind
    variable_count: int

    def __post_init__(self):
        if not isinstance(self.kind, OrderKind):
            object.__setattr__(self, "kind", parse_order_kind(self.kind))
        if self.variable_count < 1:
            raise DomainError("a monomial order needs at least one variable")

    def key(self, monomial: Monomial) -> tuple:
        """Sort key: ``a < b`` under the order iff ``key(a) < key(b)``."""
        if len(monomial.exponents) != self.variable_count:
            raise ContextMismatchError(
                f"{monomial!r} does not have {self.variable_count} variables"
            )
        return _sort_key(self.kind, monomial.exponents)

    def compare(self, a: Monomial, b: Monomial) -> Ordering:
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Ordering.EQUAL
        return Ordering.GREATER if ka > kb else Ordering.LESS

    def less(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) < self.key(b)

    def max(self, *monomials: Monomial) -> Monomial:
        return max(monomials, key=self.key)

    def min(self, *monomials: Monomial) -> Monomial:
        return min(monomials, key=self.key)


def parse_order_kind(value) -> OrderKind:
    try:
        return OrderKind(str(value).strip().lower())
    except ValueError as exc:
        choices = ", ".join(kind.value for kind in OrderKind)
        raise DomainError(f"unknown monomial order {value!r}; expected one of {choices}") from exc


def monomial_cmp(a: Monomial, b: Monomial, order: MonomialOrder) -> Ordering:
    return order.compare(a, b)
