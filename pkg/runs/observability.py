"""One structured log line per run, mirrored to an optional metrics client."""
from __future__ import annotations

import json
import logging
import time
from typing import Any, Optional

from django.conf import settings

logger = logging.getLogger(__name__)

MAX_RUN_ERROR_LENGTH = 500


def truncate_error(message: str, *, max_length: int = MAX_RUN_ERROR_LENGTH) -> str:
    if not message:
        return ""
    if len(message) <= max_length:
        return message
    return message[: max_length - 3].rstrip() + "..."


def duration_ms(start_time: float) -> int:
    elapsed = time.monotonic() - start_time
    return max(0, int(elapsed * 1000))


def log_run(
    logger: logging.Logger,
    *,
    system: str,
    algorithm: str,
    status: str,
    duration_ms_value: int,
    basis_size: Optional[int] = None,
    field_ops: Optional[int] = None,
    pairs_generated: Optional[int] = None,
    error: str = "",
    emit_metrics: bool = True,
) -> None:
    fields = {
        "system": system or "-",
        "algorithm": algorithm or "-",
        "status": status or "-",
        "duration_ms": duration_ms_value,
    }
    extras = {
        "basis_size": basis_size,
        "field_ops": field_ops,
        "pairs_generated": pairs_generated,
        "error": truncate_error(error),
    }
    message = _format_run_log(fields, extras)
    level = logging.WARNING if str(status).lower() == "failed" else logging.INFO
    logger.log(level, message)
    if emit_metrics:
        _record_run_metrics(algorithm, status, duration_ms_value)


def _format_run_log(fields: dict[str, Any], extras: dict[str, Any]) -> str:
    segments = ["groebner_run"]
    for key in ("system", "algorithm", "status", "duration_ms"):
        segments.append(f"{key}={json.dumps(fields.get(key))}")
    for key, value in extras.items():
        if value is None or value == "":
            continue
        segments.append(f"{key}={json.dumps(value)}")
    return " ".join(segments)


METRIC_METHODS = {
    "count": ("incr", "increment"),
    "timing": ("timing", "observe"),
}


def _record_run_metrics(algorithm: str, status: str, duration_ms_value: int) -> None:
    client = getattr(settings, "METRICS_CLIENT", None)
    if client is None:
        return
    outcome = {"success": "success", "failed": "failure"}.get(str(status).lower())
    if outcome:
        _send_metric(client, "count", f"groebner_run_{outcome}_total", 1)
    _send_metric(client, "timing", f"groebner_run_{algorithm.replace('-', '_')}_duration_ms", duration_ms_value)


def _send_metric(client: Any, kind: str, name: str, value: int) -> None:
    """Call the first method of ``kind`` the client has; metrics never fail a run."""
    for method in METRIC_METHODS[kind]:
        if hasattr(client, method):
            try:
                getattr(client, method)(name, value)
            except Exception:
                logger.debug("metrics client %s.%s failed", type(client).__name__, method, exc_info=True)
            return
