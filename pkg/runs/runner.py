"""Run one basis algorithm on a system and collect a report."""
from __future__ import annotations

import enum
import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from algebra.bounds import count_monomials, degree_bound_from_degrees
from algebra.context import ComputationContext
from algebra.errors import DomainError
from algebra.polynomials import Polynomial
from complexity.cost_model import ComplexityReport, CostModelInput
from groebner.buchberger import buchberger_basis, is_groebner, reduce_basis
from groebner.f5b import PairSelection, ReductionStrategy, f5b_basis
from groebner.fast_reduce import ReductionMode

from .observability import duration_ms, log_run
from .systems import PolynomialSystem

logger = logging.getLogger(__name__)


class Algorithm(str, enum.Enum):
    BUCHBERGER = "buchberger"
    F5B = "f5b"
    F5B_FAST = "f5b-fast"


ALGORITHM_CHOICES = [algorithm.value for algorithm in Algorithm]


@dataclass(frozen=True)
class InputSummary:
    m: int
    n: int
    max_degree: int
    min_degree: int
    degree_bound: int
    monomial_count: int

    @classmethod
    def from_polynomials(
        cls, polynomials: Sequence[Polynomial], degree_bound: Optional[int] = None
    ) -> InputSummary:
        if not polynomials:
            raise DomainError("cannot summarize an empty system")
        degrees = [p.total_degree for p in polynomials]
        n = polynomials[0].ctx.variable_count
        bound = degree_bound if degree_bound is not None else degree_bound_from_degrees(max(degrees), min(degrees))
        return cls(
            m=len(polynomials),
            n=n,
            max_degree=max(degrees),
            min_degree=min(degrees),
            degree_bound=bound,
            monomial_count=count_monomials(bound, n),
        )

    def model_input(self) -> CostModelInput:
        return CostModelInput(m=self.m, n=self.n, N=self.monomial_count, D=self.degree_bound)


@dataclass
class RunReport:
    system: str
    algorithm: str
    reduction: Optional[str]
    variables: list[str]
    order: str
    field: str
    input: InputSummary
    basis: list[str]
    raw_basis_size: int
    counters: dict
    predicted: dict
    verified: Optional[bool]
    elapsed_ms: int = 0
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> RunReport:
        values = dict(data)
        values["input"] = InputSummary(**values["input"])
        return cls(**values)

    @property
    def pairs_accounted(self) -> bool:
        counters = self.counters
        handled = (
            counters.get("discarded_syzygy", 0)
            + counters.get("discarded_rewritten", 0)
            + counters.get("reduced_to_zero", 0)
            + counters.get("basis_contributing", 0)
        )
        return counters.get("pairs_generated", 0) == handled


def predict(summary: InputSummary, algorithms: Sequence[str] = ALGORITHM_CHOICES) -> ComplexityReport:
    return ComplexityReport.build(summary.model_input(), algorithms=list(algorithms))


def _execute(
    algorithm: Algorithm,
    polynomials: list[Polynomial],
    *,
    mode: ReductionMode,
    selection: PairSelection,
    max_pairs: Optional[int],
) -> list[Polynomial]:
    if algorithm is Algorithm.BUCHBERGER:
        return buchberger_basis(polynomials, max_pairs=max_pairs)
    strategy = ReductionStrategy.FAST if algorithm is Algorithm.F5B_FAST else ReductionStrategy.F5
    return f5b_basis(polynomials, strategy, mode=mode, selection=selection, max_pairs=max_pairs)


def run(
    system: PolynomialSystem,
    algorithm: str,
    *,
    mode: str = ReductionMode.SAFE.value,
    selection: str = PairSelection.NORMAL.value,
    max_pairs: Optional[int] = None,
    validate: bool = True,
    degree_bound: Optional[int] = None,
) -> RunReport:
    """Run ``algorithm`` on ``system`` with a fresh operation counter.

    The reported basis is the reduced basis of the algorithm's output;
    reducing and validating it are not charged to the algorithm.
    """
    algorithm = Algorithm(algorithm)
    mode = ReductionMode(mode)
    selection = PairSelection(selection)
    ctx: ComputationContext = system.ctx.with_counter()
    polynomials = [ctx.convert(p) for p in system.polynomials]
    summary = InputSummary.from_polynomials(polynomials, degree_bound)
    counter = ctx.counter
    name = system.name or "-"

    start = time.monotonic()
    try:
        raw = _execute(algorithm, polynomials, mode=mode, selection=selection, max_pairs=max_pairs)
    except Exception as exc:
        log_run(
            logger,
            system=name,
            algorithm=algorithm.value,
            status="failed",
            duration_ms_value=duration_ms(start),
            error=f"{type(exc).__name__}: {exc}",
        )
        raise
    elapsed = duration_ms(start)

    verified = is_groebner(raw) if validate else None
    basis = reduce_basis(raw)
    counters = counter.snapshot()
    complexity = predict(summary)
    complexity.measured[algorithm.value] = {"field_ops": counters["field_ops"], **counters["phases"]}

    notes = []
    if verified is False:
        notes.append("output failed the S-polynomial check")
    if counters.get("signature_drift"):
        notes.append(f"literal reduction raised {counters['signature_drift']} signatures")
    if algorithm is Algorithm.F5B_FAST and not counters.get("reducer_choices"):
        notes.append("no reduction step had more than one admissible reducer, so every choice matched F5 reduction")
    if not summary.model_input().in_domain:
        notes.append("cost model evaluated outside m < N")

    report = RunReport(
        system=name,
        algorithm=algorithm.value,
        reduction=mode.value if algorithm is Algorithm.F5B_FAST else None,
        variables=list(ctx.variable_names),
        order=ctx.order.kind.value,
        field=ctx.field.descriptor,
        input=summary,
        basis=[ctx.format_polynomial(p) for p in basis],
        raw_basis_size=len(raw),
        counters=counters,
        predicted=complexity.to_dict(),
        verified=verified,
        elapsed_ms=elapsed,
        notes=notes,
    )
    log_run(
        logger,
        system=name,
        algorithm=algorithm.value,
        status="success",
        duration_ms_value=elapsed,
        basis_size=len(basis),
        field_ops=counters["field_ops"],
        pairs_generated=counters["pairs_generated"],
    )
    return report
