"""Monte Carlo play-out of a fixed plan against a static accept/reject opponent.

Trials are grouped into fixed-size blocks. Block ``b`` draws from its own
stream ``SeedSequence(seed, spawn_key=(b,))``, so trial ``t`` always sees the
same random numbers no matter how many worker threads are used.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .core import Bid, check_unique

BLOCK_SIZE = 4096
THREADS_ENV = "MIARVELOUS_THREADS"


@dataclass(frozen=True)
class SimulationResult:
    trials: int
    mean_utility: float
    std_error: float
    agreement_rate: float
    acceptance_counts: Tuple[int, ...]
    seed: int

    @property
    def agreements(self) -> int:
        return sum(self.acceptance_counts)


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _block_counts(acceptance: np.ndarray, seed: int, block: int, size: int) -> np.ndarray:
    """Number of trials in a block ending at each plan position; last slot counts no-deal."""
    k = acceptance.size
    counts = np.zeros(k + 1, dtype=np.int64)
    if k == 0:
        counts[0] = size
        return counts
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))
    draws = rng.random((size, k))
    accepted = draws < acceptance
    first = np.where(accepted.any(axis=1), accepted.argmax(axis=1), k)
    return np.bincount(first, minlength=k + 1)


def simulate(
    plan: Sequence[Bid], rv: float, trials: int, seed: int, threads: Optional[int] = None
) -> SimulationResult:
    """Offer ``plan`` in order, each bid accepted independently with its probability.

    A trial pays the first accepted bid's utility, or ``rv`` if every offer is
    rejected. ``std_error`` uses the unbiased sample variance and is 0 for a
    single trial.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    check_unique(plan)
    seed = int(seed)
    if seed < 0:
        raise ValueError("seed must be non-negative")
    acceptance = np.array([b.acceptance_probability for b in plan], dtype=float)
    k = len(plan)

    sizes = [BLOCK_SIZE] * (trials // BLOCK_SIZE)
    if trials % BLOCK_SIZE:
        sizes.append(trials % BLOCK_SIZE)
    jobs = [(seed, b, size) for b, size in enumerate(sizes)]
    threads = default_threads() if threads is None else max(1, threads)
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda job: _block_counts(acceptance, *job), jobs))
    else:
        parts = [_block_counts(acceptance, *job) for job in jobs]
    # integer counts make the aggregate independent of evaluation order
    counts = np.sum(parts, axis=0) if parts else np.zeros(k + 1, dtype=np.int64)

    payoffs = [b.utility for b in plan] + [rv]
    weights = [int(c) for c in counts]
    mean = math.fsum(c / trials * x for c, x in zip(weights, payoffs))
    if trials > 1:
        ss = math.fsum(c * (x - mean) ** 2 for c, x in zip(weights, payoffs))
        std_error = math.sqrt(ss / (trials - 1)) / math.sqrt(trials)
    else:
        std_error = 0.0
    agreements = sum(weights[:k])
    return SimulationResult(
        trials=trials,
        mean_utility=mean,
        std_error=std_error,
        agreement_rate=agreements / trials,
        acceptance_counts=tuple(weights[:k]),
        seed=seed,
    )
