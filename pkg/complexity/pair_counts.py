"""Critical-pair counts of the cost model's loop analysis.

While the basis grows (steps ``1..N-m``) every step removes one pair and
adds one pair per existing basis element. After that the basis is
saturated and each step only removes a pair, so the main loop runs
``W = (N - m) + |CP_{N-m}|`` times.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from algebra.errors import DomainError

logger = logging.getLogger(__name__)


def closed_form_pairs(m: int, i: int) -> int:
    """Pending pairs after ``i`` growth steps: ``m(m-1)/2 + (m-1)i + i(i-1)/2``."""
    if m < 1 or i < 0:
        raise DomainError(f"closed form needs m >= 1 and i >= 0, got m={m}, i={i}")
    return m * (m - 1) // 2 + (m - 1) * i + i * (i - 1) // 2


def saturated_pairs(m: int, N: int) -> int:
    """Pending pairs when growth stops: ``N^2/2 - 3N/2 + m``."""
    return (N * N - 3 * N) // 2 + m


@dataclass(frozen=True)
class PairCountTrace:
    m: int
    N: int
    pairs: tuple[int, ...]
    buchberger_pairs: tuple[int, ...]
    basis_sizes: tuple[int, ...]
    loops: int
    notes: tuple[str, ...]

    @property
    def growth_steps(self) -> int:
        return self.N - self.m

    @property
    def growth(self) -> tuple[int, ...]:
        return self.pairs[: self.growth_steps + 1]

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "N": self.N,
            "growth_steps": self.growth_steps,
            "pairs": list(self.pairs),
            "buchberger_pairs": list(self.buchberger_pairs),
            "basis_sizes": list(self.basis_sizes),
            "loops": self.loops,
            "notes": list(self.notes),
        }


def _drain(start: int) -> list[int]:
    return list(range(start - 1, -1, -1))


def simulate_pair_counts(m: int, N: int) -> PairCountTrace:
    """Iterate both pair-count recurrences through the growth and drain phases.

    ``pairs`` follows the signature algorithm's bookkeeping, where step
    ``i`` adds one pair per element of the previous basis (``m + i - 1``).
    ``buchberger_pairs`` follows the plain algorithm's B-set, which adds
    ``|G_i| = m + i`` pairs after step ``i`` while dropping the processed
    one. Notes record whether each trace matches ``closed_form_pairs``.
    """
    if m < 1:
        raise DomainError(f"need at least one generator, got m={m}")
    if m >= N:
        raise DomainError(f"pair counts need m < N, got m={m}, N={N}")
    steps = N - m

    pairs = [m * (m - 1) // 2]
    basis_sizes = [m]
    for _ in range(steps):
        pairs.append(pairs[-1] - 1 + basis_sizes[-1])
        basis_sizes.append(basis_sizes[-1] + 1)

    buchberger_pairs = [m * (m - 1) // 2]
    for i in range(steps):
        generated = m + i
        buchberger_pairs.append(buchberger_pairs[-1] - 1 + generated)

    notes = []
    for name, trace in (("pairs", pairs), ("buchberger_pairs", buchberger_pairs)):
        mismatch = next((i for i, value in enumerate(trace) if value != closed_form_pairs(m, i)), None)
        if mismatch is None:
            notes.append(f"{name} matches the closed form for all {steps} growth steps")
        else:
            notes.append(
                f"{name} leaves the closed form at step {mismatch}: "
                f"{trace[mismatch]} != {closed_form_pairs(m, mismatch)}"
            )
            logger.warning("pair recurrence %s disagrees with the closed form at step %d", name, mismatch)
    if pairs[-1] != saturated_pairs(m, N):
        notes.append(f"growth ends at {pairs[-1]} pairs, expected {saturated_pairs(m, N)}")

    loops = steps + pairs[-1]
    return PairCountTrace(
        m=m,
        N=N,
        pairs=tuple(pairs + _drain(pairs[-1])),
        buchberger_pairs=tuple(buchberger_pairs + _drain(buchberger_pairs[-1])),
        basis_sizes=tuple(basis_sizes),
        loops=loops,
        notes=tuple(notes),
    )
