"""Exact ground fields: the rationals and prime fields GF(p).

Field elements are plain Python values owned by a field descriptor: a
``Fraction`` for the rationals and an ``int`` in ``[0, p)`` for GF(p). The
descriptor performs every operation so the canonical form of each element
is maintained in one place.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational
from typing import Any

from sympy import isprime

from .errors import DomainError, FieldDivisionByZero

MAX_PRIME_MODULUS = 2**63

FieldElement = Any


class Field(ABC):
    """A ground field K of the polynomial ring K[x_1, ..., x_n]."""

    descriptor: str = ""

    @property
    @abstractmethod
    def zero(self) -> FieldElement: ...

    @property
    @abstractmethod
    def one(self) -> FieldElement: ...

    @abstractmethod
    def convert(self, value: Any) -> FieldElement:
        """Map an integer or rational into the field."""

    @abstractmethod
    def add(self, a: FieldElement, b: FieldElement) -> FieldElement: ...

    @abstractmethod
    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement: ...

    @abstractmethod
    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement: ...

    @abstractmethod
    def neg(self, a: FieldElement) -> FieldElement: ...

    @abstractmethod
    def inv(self, a: FieldElement) -> FieldElement: ...

    @abstractmethod
    def is_canonical(self, a: FieldElement) -> bool:
        """True when ``a`` is stored in this field's canonical form."""

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: FieldElement) -> bool:
        return a == 0

    def is_one(self, a: FieldElement) -> bool:
        return a == 1

    def format(self, a: FieldElement) -> str:
        return str(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.descriptor == self.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor}>"


class RationalField(Field):
    """The rationals, with elements held as reduced ``Fraction`` values."""

    descriptor = "q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, value: Any) -> Fraction:
        if isinstance(value, bool):
            raise DomainError("booleans are not field elements")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(int(value.numerator), int(value.denominator))
        if hasattr(value, "p") and hasattr(value, "q"):
            # sympy Integer / Rational
            return Fraction(int(value.p), int(value.q))
        raise DomainError(f"cannot interpret {value!r} as a rational number")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise FieldDivisionByZero("division by zero in Q")
        return 1 / a

    def is_canonical(self, a: FieldElement) -> bool:
        # Fraction normalizes on construction: reduced, positive denominator.
        return isinstance(a, Fraction) and a.denominator > 0

    def format(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


class PrimeField(Field):
    """GF(p) for a prime ``p < 2**63``, elements held as ints in ``[0, p)``."""

    def __init__(self, modulus: int):
        if isinstance(modulus, bool) or not isinstance(modulus, int):
            raise DomainError(f"modulus must be an integer, got {modulus!r}")
        if modulus < 2 or modulus >= MAX_PRIME_MODULUS:
            raise DomainError(f"modulus {modulus} is outside 2 <= p < 2**63")
        if not isprime(modulus):
            raise DomainError(f"modulus {modulus} is not prime")
        self.modulus = modulus
        self.descriptor = f"gf {modulus}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def convert(self, value: Any) -> int:
        if isinstance(value, bool):
            raise DomainError("booleans are not field elements")
        if isinstance(value, int):
            return value % self.modulus
        numerator, denominator = _rational_parts(value)
        if denominator % self.modulus == 0:
            raise FieldDivisionByZero(
                f"denominator {denominator} vanishes in GF({self.modulus})"
            )
        return numerator * pow(denominator, -1, self.modulus) % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise FieldDivisionByZero(f"division by zero in GF({self.modulus})")
        return pow(a, -1, self.modulus)

    def is_canonical(self, a: FieldElement) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.modulus


def _rational_parts(value: Any) -> tuple[int, int]:
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    if isinstance(value, Rational):
        return int(value.numerator), int(value.denominator)
    if hasattr(value, "p") and hasattr(value, "q"):
        return int(value.p), int(value.q)
    raise DomainError(f"cannot interpret {value!r} as a rational number")


def field_from_descriptor(descriptor: str) -> Field:
    """Build a field from ``q`` or ``gf <p>``."""
    tokens = (descriptor or "").strip().lower().split()
    if tokens == ["q"]:
        return RationalField()
    if len(tokens) == 2 and tokens[0] == "gf":
        try:
            modulus = int(tokens[1])
        except ValueError as exc:
            raise DomainError(f"modulus {tokens[1]!r} is not an integer") from exc
        return PrimeField(modulus)
    raise DomainError(f"unknown field {descriptor!r}; expected 'q' or 'gf <p>'")
