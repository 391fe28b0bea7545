"""Ground-field operation counting.

One arithmetic operation in the coefficient field is one step. The counter
is owned by a computation context; polynomial primitives charge it in bulk
and algorithms record named events (pairs generated, discards, ...).
"""
from __future__ import annotations

import threading
from collections import Counter
from contextlib import contextmanager
from typing import Iterator

DEFAULT_PHASE = "other"
VALIDATION_PHASE = "validation"
CANONICALIZE_PHASE = "canonicalize"

# Work done after an algorithm finishes; kept out of totals and event counts.
POSTPROCESS_PHASES = frozenset({CANONICALIZE_PHASE, VALIDATION_PHASE})

EVENT_NAMES = (
    "pairs_generated",
    "discarded_syzygy",
    "discarded_rewritten",
    "reduced_to_zero",
    "basis_contributing",
    "reduction_steps",
    "signature_drift",
    "reducer_choices",
)


class OpCounter:
    """Thread-safe tally of field operations per phase plus named events."""

    def __init__(self):
        self._lock = threading.Lock()
        self._phase_ops: Counter[str] = Counter()
        self._events: Counter[str] = Counter({name: 0 for name in EVENT_NAMES})
        self._phases: list[str] = [DEFAULT_PHASE]
        self._suspended = 0

    @property
    def current_phase(self) -> str:
        return self._phases[-1]

    def charge(self, ops: int = 1) -> None:
        if ops <= 0 or self._suspended:
            return
        with self._lock:
            self._phase_ops[self._phases[-1]] += ops

    def record(self, event: str, amount: int = 1) -> None:
        with self._lock:
            if self._phases[-1] in POSTPROCESS_PHASES:
                return
            self._events[event] += amount

    @contextmanager
    def phase(self, name: str) -> Iterator["OpCounter"]:
        with self._lock:
            self._phases.append(name)
        try:
            yield self
        finally:
            with self._lock:
                self._phases.pop()

    @contextmanager
    def suspended(self) -> Iterator["OpCounter"]:
        """Stop charging field operations inside the block."""
        with self._lock:
            self._suspended += 1
        try:
            yield self
        finally:
            with self._lock:
                self._suspended -= 1

    def event(self, name: str) -> int:
        with self._lock:
            return self._events[name]

    def field_ops(self, *, include_postprocess: bool = False) -> int:
        with self._lock:
            return sum(
                count
                for phase, count in self._phase_ops.items()
                if include_postprocess or phase not in POSTPROCESS_PHASES
            )

    def phase_ops(self) -> dict[str, int]:
        with self._lock:
            return dict(sorted(self._phase_ops.items()))

    def events(self) -> dict[str, int]:
        with self._lock:
            return dict(sorted(self._events.items()))

    def pairs_accounted(self) -> bool:
        """Every generated pair was discarded, reduced to zero or grew the basis."""
        events = self.events()
        settled = (
            events["discarded_syzygy"]
            + events["discarded_rewritten"]
            + events["reduced_to_zero"]
            + events["basis_contributing"]
        )
        return events["pairs_generated"] == settled

    def snapshot(self) -> dict:
        return {
            "field_ops": self.field_ops(),
            "phases": self.phase_ops(),
            **self.events(),
        }

    def reset(self) -> None:
        with self._lock:
            self._phase_ops.clear()
            self._events = Counter({name: 0 for name in EVENT_NAMES})
