"""Text and JSON renderings of run reports.

The JSON form is ``RunReport.to_dict`` with sorted keys, so two runs of a
deterministic algorithm differ only in ``elapsed_ms``.
"""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .runner import RunReport

REPORT_FORMATS = ("text", "json")

EVENT_ROWS = (
    "pairs_generated",
    "discarded_syzygy",
    "discarded_rewritten",
    "reduced_to_zero",
    "basis_contributing",
    "reduction_steps",
    "signature_drift",
    "reducer_choices",
)


def _check_format(fmt: str) -> None:
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")


def emit_report(report: RunReport, fmt: str = "text") -> str:
    _check_format(fmt)
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2)
    return _text_report(report)


def emit_reports(reports: Sequence[RunReport], fmt: str = "text") -> str:
    _check_format(fmt)
    if fmt == "json":
        return json.dumps([report.to_dict() for report in reports], sort_keys=True, indent=2)
    return "\n\n".join(_text_report(report) for report in reports)


def _yes_no(value) -> str:
    if value is None:
        return "skipped"
    return "yes" if value else "no"


def _text_report(report: RunReport) -> str:
    summary = report.input
    algorithm = report.algorithm
    if report.reduction:
        algorithm = f"{algorithm} ({report.reduction} reduction)"
    lines = [
        f"system:     {report.system}",
        f"algorithm:  {algorithm}",
        f"ring:       {', '.join(report.variables)} | {report.order} | {report.field}",
        (
            f"input:      m={summary.m} n={summary.n} maxdeg={summary.max_degree} "
            f"mindeg={summary.min_degree} D={summary.degree_bound} N={summary.monomial_count}"
        ),
        f"basis ({len(report.basis)} elements, {report.raw_basis_size} before reduction):",
    ]
    lines.extend(f"  {member}" for member in report.basis)
    lines.append(f"verified:   {_yes_no(report.verified)}")
    lines.append("counters:")
    lines.append(f"  field_ops: {report.counters.get('field_ops', 0)}")
    for name in EVENT_ROWS:
        lines.append(f"  {name}: {report.counters.get(name, 0)}")
    phases = report.counters.get("phases", {})
    if phases:
        lines.append("phases:")
        lines.extend(f"  {name}: {phases[name]}" for name in sorted(phases))
    lines.extend(_prediction_lines(report.predicted))
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"elapsed_ms: {report.elapsed_ms}")
    return "\n".join(lines)


def _prediction_lines(predicted: dict) -> Iterable[str]:
    values = predicted.get("predicted", {})
    if not values:
        return []
    leading = predicted.get("leading_terms", {})
    lines = ["predicted field operations:"]
    for name in sorted(values):
        lines.append(f"  {name}: {values[name]} (leading {leading.get(name, '-')})")
    return lines


def emit_prediction(predicted: dict, fmt: str = "text") -> str:
    """Render a ``ComplexityReport.to_dict`` without a run."""
    _check_format(fmt)
    if fmt == "json":
        return json.dumps(predicted, sort_keys=True, indent=2)
    model = predicted["model"]
    lines = [f"model:      m={model['m']} n={model['n']} D={model['D']} N={model['N']}"]
    if not predicted.get("in_domain", True):
        lines.append("note: m >= N, outside the model's domain")
    lines.extend(_prediction_lines(predicted))
    polynomials = predicted.get("polynomials", {})
    if polynomials:
        lines.append("cost polynomials:")
        lines.extend(f"  {name}: {polynomials[name]}" for name in sorted(polynomials))
    return "\n".join(lines)
