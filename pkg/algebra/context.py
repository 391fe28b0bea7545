from __future__ import annotations

import re
from dataclasses import dataclass, field as dataclass_field
from tokenize import TokenError
from typing import Any, Iterable, Mapping, Sequence, Union

from sympy import Add, Mul, Poly, Pow, Rational, Symbol, sympify
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from .counting import OpCounter
from .errors import ContextMismatchError, DomainError
from .fields import Field, field_from_descriptor
from .monomials import Monomial
from .orders import MonomialOrder
from .polynomials import Polynomial

IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

PARSE_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass(frozen=True, eq=False)
class ComputationContext:
    """The polynomial ring K[x_1, ..., x_n] one algorithm run works in.

    Every polynomial of a run shares one context. Two contexts with the same
    variables, order and field describe the same ring (``ring_key``) but keep
    separate operation counters.
    """

    variable_names: tuple[str, ...]
    order: MonomialOrder
    field: Field
    counter: OpCounter = dataclass_field(default_factory=OpCounter)

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise DomainError("at least one variable is required")
        for name in names:
            if not IDENTIFIER_RE.match(name):
                raise DomainError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names}")
        if self.order.variable_count != len(names):
            raise ContextMismatchError(
                f"order is defined on {self.order.variable_count} variables, not {len(names)}"
            )

    @classmethod
    def create(
        cls,
        variable_names: Sequence[str],
        *,
        order: Union[str, MonomialOrder] = "grevlex",
        field: Union[str, Field] = "q",
    ) -> ComputationContext:
        names = tuple(variable_names)
        if not isinstance(order, MonomialOrder):
            order = MonomialOrder(order, len(names))
        if not isinstance(field, Field):
            field = field_from_descriptor(field)
        return cls(names, order, field)

    @property
    def variable_count(self) -> int:
        return len(self.variable_names)

    @property
    def ring_key(self) -> tuple:
        return (self.variable_names, self.order.kind, self.field.descriptor)

    def with_counter(self, counter: OpCounter | None = None) -> ComputationContext:
        return ComputationContext(
            self.variable_names, self.order, self.field, counter or OpCounter()
        )

    def with_order(self, order: Union[str, MonomialOrder]) -> ComputationContext:
        if not isinstance(order, MonomialOrder):
            order = MonomialOrder(order, self.variable_count)
        return ComputationContext(self.variable_names, order, self.field, self.counter)

    def with_field(self, field: Union[str, Field]) -> ComputationContext:
        if not isinstance(field, Field):
            field = field_from_descriptor(field)
        return ComputationContext(self.variable_names, self.order, field, self.counter)

    # -- constructors -----------------------------------------------------

    def monomial(self, exponents: Iterable[int]) -> Monomial:
        monomial = Monomial(exponents)
        if len(monomial) != self.variable_count:
            raise ContextMismatchError(
                f"{monomial!r} does not have {self.variable_count} variables"
            )
        return monomial

    def one(self) -> Monomial:
        return Monomial.one(self.variable_count)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self)

    def constant(self, value: Any) -> Polynomial:
        return Polynomial.from_terms(self, [(value, self.one())])

    def variable(self, name: str) -> Polynomial:
        try:
            index = self.variable_names.index(name)
        except ValueError as exc:
            raise DomainError(f"unknown variable {name!r}") from exc
        return Polynomial.from_terms(
            self, [(1, Monomial.variable(index, self.variable_count))]
        )

    def polynomial(self, terms: Union[Mapping, Iterable[tuple[Any, Any]]]) -> Polynomial:
        """Build a polynomial from ``{exponents: coefficient}`` or ``(coefficient, exponents)`` pairs."""
        if isinstance(terms, Mapping):
            terms = [(coefficient, exps) for exps, coefficient in terms.items()]
        return Polynomial.from_terms(self, terms)

    def convert(self, polynomial: Polynomial) -> Polynomial:
        """Re-home ``polynomial`` into this context, re-sorting and re-reducing coefficients."""
        if polynomial.ctx.variable_names != self.variable_names:
            raise ContextMismatchError("variables differ between contexts")
        return Polynomial.from_terms(self, polynomial.terms)

    def symbols(self) -> dict[str, Symbol]:
        return {name: Symbol(name) for name in self.variable_names}

    def from_expression(self, expression: Any) -> Polynomial:
        """Convert a sympy expression over this context's variables."""
        symbols = self.symbols()
        gens = [symbols[name] for name in self.variable_names]
        expression = sympify(expression)
        unknown = sorted(str(s) for s in expression.free_symbols if str(s) not in symbols)
        if unknown:
            raise DomainError(f"unknown variable {unknown[0]!r}")
        try:
            poly = Poly(expression, *gens)
        except PolynomialError as exc:
            raise DomainError(f"{expression} is not a polynomial in {', '.join(self.variable_names)}") from exc
        return Polynomial.from_terms(self, [(coeff, exps) for exps, coeff in poly.terms()])

    def parse(self, text: str) -> Polynomial:
        """Parse ``x^2*y - 3*x + 1/2`` style text."""
        try:
            expression = parse_expr(
                text,
                local_dict=self.symbols(),
                transformations=PARSE_TRANSFORMATIONS,
                evaluate=True,
            )
        except (SyntaxError, TypeError, SympifyError, TokenError) as exc:
            raise DomainError(f"cannot parse {text!r}: {exc}") from exc
        return self.from_expression(expression)

    def to_expression(self, polynomial: Polynomial):
        """The sympy expression of ``polynomial`` with rational coefficients."""
        symbols = [Symbol(name) for name in self.variable_names]
        terms = []
        for coefficient, monomial in polynomial.terms:
            factors = [_as_sympy_rational(coefficient)]
            factors.extend(Pow(s, e) for s, e in zip(symbols, monomial.exponents) if e)
            terms.append(Mul(*factors))
        return Add(*terms)

    # -- formatting -------------------------------------------------------

    def format_monomial(self, monomial: Monomial) -> str:
        parts = []
        for name, exponent in zip(self.variable_names, monomial.exponents):
            if exponent == 1:
                parts.append(name)
            elif exponent > 1:
                parts.append(f"{name}^{exponent}")
        return "*".join(parts) or "1"

    def format_polynomial(self, polynomial: Polynomial) -> str:
        if not polynomial.terms:
            return "0"
        pieces: list[str] = []
        for position, (coefficient, monomial) in enumerate(polynomial.terms):
            negative = coefficient < 0
            magnitude = -coefficient if negative else coefficient
            text = self.field.format(magnitude)
            if monomial.is_one():
                body = text
            elif self.field.is_one(magnitude):
                body = self.format_monomial(monomial)
            else:
                body = f"{text}*{self.format_monomial(monomial)}"
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return (
            f"<ComputationContext vars={','.join(self.variable_names)} "
            f"order={self.order.kind.value} field={self.field.descriptor}>"
        )


def _as_sympy_rational(value: Any) -> Rational:
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Rational(int(value.numerator), int(value.denominator))
    return Rational(int(value))
