"""Closed-form cost model of the three basis algorithms.

Costs are counted in ground-field operations and expressed as polynomials
in ``N``, the number of monomials of degree at most ``D`` in ``n``
variables, with ``m`` input generators. Every coefficient is an exact
``Fraction``; nothing here uses floating point.

The whole-algorithm polynomials are only meaningful for ``m < N``. Outside
that range they are still evaluated, and a warning is logged.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from algebra.bounds import count_monomials, degree_bound
from algebra.errors import DomainError
from algebra.polynomials import Polynomial

logger = logging.getLogger(__name__)

Coefficients = tuple[Fraction, ...]

BUCHBERGER = "buchberger"
F5B = "f5b"
F5B_FAST = "f5b-fast"


@dataclass(frozen=True)
class CostModelInput:
    m: int
    n: int
    N: int
    D: Optional[int] = None

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"the cost model needs at least one generator, got m={self.m}")
        if self.n < 1:
            raise DomainError(f"the cost model needs at least one variable, got n={self.n}")
        if self.N < 0:
            raise DomainError(f"monomial count must be non-negative, got N={self.N}")
        if self.D is not None and self.D < 0:
            raise DomainError(f"degree bound must be non-negative, got D={self.D}")

    @classmethod
    def from_degree(cls, m: int, n: int, D: int) -> CostModelInput:
        return cls(m=m, n=n, N=count_monomials(D, n), D=D)

    @classmethod
    def from_system(cls, polynomials: Sequence[Polynomial], D: Optional[int] = None) -> CostModelInput:
        """Model input of a polynomial system; ``D`` defaults to the system's degree bound."""
        generators = [p for p in polynomials if not p.is_zero()]
        if not generators:
            raise DomainError("the cost model needs a non-zero generator")
        if D is None:
            D = degree_bound(generators)
        return cls.from_degree(len(generators), generators[0].ctx.variable_count, D)

    @property
    def in_domain(self) -> bool:
        return self.m < self.N

    def as_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "D": self.D, "N": self.N}


def _check_domain(model: CostModelInput, what: str) -> None:
    if not model.in_domain:
        logger.warning("%s evaluated outside the model domain: m=%d >= N=%d", what, model.m, model.N)


def _fractions(*values) -> Coefficients:
    return tuple(Fraction(value) for value in values)


def evaluate(coefficients: Sequence[Fraction], x) -> Fraction:
    """Horner evaluation of ``coefficients`` (constant term first) at ``x``."""
    result = Fraction(0)
    for coefficient in reversed(coefficients):
        result = result * x + coefficient
    return result


def _degree(coefficients: Sequence[Fraction]) -> int:
    for power in range(len(coefficients) - 1, -1, -1):
        if coefficients[power] != 0:
            return power
    return -1


# -- whole-algorithm costs ------------------------------------------------


def buchberger_cost_coefficients(m: int, n: int) -> Coefficients:
    m, n = Fraction(m), Fraction(n)
    half = Fraction(1, 2)
    return (
        Fraction(0),
        -half * m**2 * n - m * n - 3 * half * n - half,
        -(m**2) * n - 3 * half * n - 3 * half,
        2 * m * n - half * n + 7,
        Fraction(1),
        3 * half * n,
    )


def f5b_cost_coefficients(m: int, n: int) -> Coefficients:
    m, n = Fraction(m), Fraction(n)
    third, sixth = Fraction(1, 3), Fraction(1, 6)
    return (
        -Fraction(11, 2) * m**2 * n - 4 * m**2 + Fraction(7, 2) * m * n + 2 * m,
        -2 * third * m**3 * n - 2 * third * m**3 + m**2 * n + 17 * sixth * m * n + 8 * third * m
        - Fraction(11, 2) * n - 2,
        10 * third * m**3 * n - 3 * m**2 * n - m**2 + 14 * third * m * n + 2 * m - 16 * third * n - 2 * third,
        -(m**2) * n + m * n + m + 11 * sixth * n + 2,
        m * n + 14 * third * n + 2 * third,
        2 * third * n,
    )


def fast_cost_coefficients(m: int, n: int) -> Coefficients:
    m, n = Fraction(m), Fraction(n)
    return (
        4 * m**2 * n - 2 * m**2 + 2 * m,
        -7 * m**2 * n + 10 * m * n - m**2 - m - 2 * n - 2,
        -3 * m**2 * n - m**2 + 5 * m * n - 5 * n - 1,
        -(m**2) * n + m * n + m + Fraction(15, 2) * n + 31,
        m * n + 4 * n,
    )


def eval_buchberger_cost(model: CostModelInput) -> Fraction:
    _check_domain(model, "buchberger cost")
    return evaluate(buchberger_cost_coefficients(model.m, model.n), model.N)


def eval_f5b_cost(model: CostModelInput) -> Fraction:
    """F5B cost, constant block included; may be negative outside ``m < N``."""
    _check_domain(model, "f5b cost")
    return evaluate(f5b_cost_coefficients(model.m, model.n), model.N)


def eval_fast_cost(model: CostModelInput) -> Fraction:
    _check_domain(model, "f5b-fast cost")
    return evaluate(fast_cost_coefficients(model.m, model.n), model.N)


COST_MODELS: Mapping[str, tuple[Callable[[int, int], Coefficients], Callable[[CostModelInput], Fraction]]] = {
    BUCHBERGER: (buchberger_cost_coefficients, eval_buchberger_cost),
    F5B: (f5b_cost_coefficients, eval_f5b_cost),
    F5B_FAST: (fast_cost_coefficients, eval_fast_cost),
}


# -- per-pair reduction costs ---------------------------------------------


def f5_reduction_cost_coefficients(model: CostModelInput) -> Coefficients:
    """Coefficients in ``|B|`` (constant first) of one F5 reduction."""
    m, n, N = model.m, model.n, model.N
    return _fractions(
        (m * n + n) * N**3 + (m * n + m + 1) * N**2,
        4 * n * N**2 + 7 * n * N,
        2 * n * N**2 + (2 * n + 2) * N,
    )


def fast_reduction_cost_coefficients(model: CostModelInput) -> Coefficients:
    """Coefficients in ``|B|`` of one S-polynomial reduction with the fast heuristic."""
    m, n, N = model.m, model.n, model.N
    return _fractions(
        (m * n + n) * N**3 + (m * n + m + 2 * n + 1) * N**2 + (n + 2) * N,
        2 * n * N**2 + 7 * n * N,
    )


def _check_b_size(b_size: int) -> None:
    if b_size < 0:
        raise DomainError(f"basis size must be non-negative, got {b_size}")


def eval_f5_reduction_cost(model: CostModelInput, b_size: int) -> Fraction:
    _check_b_size(b_size)
    return evaluate(f5_reduction_cost_coefficients(model), b_size)


def eval_fast_reduction_cost(model: CostModelInput, b_size: int) -> Fraction:
    _check_b_size(b_size)
    return evaluate(fast_reduction_cost_coefficients(model), b_size)


def fast_reduction_threshold(model: CostModelInput) -> Optional[int]:
    """Least ``B0`` with fast reduction strictly cheaper for every ``|B| >= B0``.

    ``None`` when no such size exists (``N = 0`` makes both costs vanish).
    """
    row1 = f5_reduction_cost_coefficients(model)
    row2 = fast_reduction_cost_coefficients(model)
    difference = [a - b for a, b in zip(row1, row2 + (Fraction(0),))]
    # Linear and quadratic coefficients are non-negative, so the
    # difference is non-decreasing on |B| >= 0.
    if difference[1] <= 0 and difference[2] <= 0:
        return 0 if difference[0] > 0 else None
    b_size = 0
    while evaluate(difference, b_size) <= 0:
        b_size += 1
    return b_size


# -- asymptotics -----------------------------------------------------------


@dataclass(frozen=True)
class LeadingTerm:
    algorithm: str
    coefficient: Fraction
    power: int

    def format(self) -> str:
        return f"{format_rational(self.coefficient)}*N^{self.power}"


def leading_terms(m: int, n: int) -> dict[str, LeadingTerm]:
    """Highest-power term in ``N`` of each whole-algorithm cost."""
    terms = {}
    for algorithm, (coefficients_for, _) in COST_MODELS.items():
        coefficients = coefficients_for(m, n)
        power = _degree(coefficients)
        terms[algorithm] = LeadingTerm(algorithm, coefficients[power], power)
    return terms


def _cauchy_bound(coefficients: Sequence[Fraction]) -> Fraction:
    """Every real root has absolute value below this bound."""
    power = _degree(coefficients)
    lead = abs(coefficients[power])
    return 1 + max((abs(c) / lead for c in coefficients[:power]), default=Fraction(0))


def crossover_point(m: int, n: int) -> int:
    """Least ``N0 >= 0`` with fast < f5b < buchberger cost for every ``N >= N0``."""
    buchberger = buchberger_cost_coefficients(m, n)
    f5b = f5b_cost_coefficients(m, n)
    fast = fast_cost_coefficients(m, n) + (Fraction(0),)
    gaps = (
        [a - b for a, b in zip(f5b, fast)],
        [a - b for a, b in zip(buchberger, f5b)],
    )
    # Both gaps have a positive leading coefficient, so they stay positive
    # past their largest root.
    start = int(max(_cauchy_bound(gap) for gap in gaps)) + 1
    first = start
    for N in range(start - 1, -1, -1):
        if all(evaluate(gap, N) > 0 for gap in gaps):
            first = N
        else:
            break
    return first


# -- rendering -------------------------------------------------------------


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_cost_polynomial(coefficients: Sequence[Fraction], variable: str = "N") -> str:
    parts = []
    for power in range(len(coefficients) - 1, -1, -1):
        coefficient = Fraction(coefficients[power])
        if coefficient == 0:
            continue
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        if power == 0:
            body = format_rational(magnitude)
        else:
            monomial = variable if power == 1 else f"{variable}^{power}"
            body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@dataclass
class ComplexityReport:
    """Predicted costs of a model input next to measured field-operation counts."""

    model: CostModelInput
    predicted: dict[str, Fraction]
    leading_terms: dict[str, LeadingTerm]
    measured: dict[str, dict[str, int]] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        model: CostModelInput,
        measured: Optional[Mapping[str, Mapping[str, int]]] = None,
        algorithms: Sequence[str] = tuple(COST_MODELS),
    ) -> ComplexityReport:
        unknown = [name for name in algorithms if name not in COST_MODELS]
        if unknown:
            raise DomainError(f"no cost model for {', '.join(unknown)}")
        predicted = {name: COST_MODELS[name][1](model) for name in algorithms}
        terms = leading_terms(model.m, model.n)
        return cls(
            model=model,
            predicted=predicted,
            leading_terms={name: terms[name] for name in algorithms},
            measured={name: dict(values) for name, values in (measured or {}).items()},
        )

    def to_dict(self) -> dict:
        return {
            "model": self.model.as_dict(),
            "in_domain": self.model.in_domain,
            "predicted": {name: format_rational(value) for name, value in self.predicted.items()},
            "polynomials": {
                name: format_cost_polynomial(COST_MODELS[name][0](self.model.m, self.model.n))
                for name in self.predicted
            },
            "leading_terms": {name: term.format() for name, term in self.leading_terms.items()},
            "measured": self.measured,
        }
