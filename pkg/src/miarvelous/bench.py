"""Wall-clock scaling of the planner in domain size and deadline."""

from __future__ import annotations

import csv
import gc
import io
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Sequence

from .generators import random_problem
from .planner import plan_miarvelous

CSV_COLUMNS = (
    "n",
    "deadline",
    "reps",
    "naive_median_s",
    "incremental_median_s",
    "plans_identical",
    "max_eu_gap",
)


@dataclass(frozen=True)
class BenchRow:
    n: int
    deadline: int
    reps: int
    naive_median_s: float
    incremental_median_s: float
    plans_identical: bool
    max_eu_gap: float


def _timed(problem, method):
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        plan = plan_miarvelous(problem, method=method)
        return time.perf_counter() - start, plan
    finally:
        if enabled:
            gc.enable()


def bench_cell(n: int, deadline: int, reps: int, seed: int, rv: float = 0.0) -> BenchRow:
    naive_times, inc_times = [], []
    identical = True
    gap = 0.0
    # untimed warm-up on the first instance
    for method in ("naive", "incremental"):
        plan_miarvelous(random_problem(n, rv, deadline, seed=seed), method=method)
    for rep in range(reps):
        problem = random_problem(n, rv, deadline, seed=seed + rep, correlation="independent")
        t_naive, p_naive = _timed(problem, "naive")
        t_inc, p_inc = _timed(problem, "incremental")
        naive_times.append(t_naive)
        inc_times.append(t_inc)
        identical &= p_naive.ids == p_inc.ids
        gap = max(gap, abs(p_naive.expected_utility - p_inc.expected_utility))
    return BenchRow(
        n, deadline, reps, statistics.median(naive_times), statistics.median(inc_times), identical, gap
    )


def bench_scaling(
    n_values: Sequence[int], d_values: Sequence[int], reps: int = 3, seed: int = 0, rv: float = 0.0
) -> List[BenchRow]:
    """Median planner time for every ``(n, D)`` cell, both evaluation paths.

    Each cell plans ``reps`` seeded instances (``seed``, ``seed + 1``, ...),
    single-threaded, one instance at a time.
    """
    if reps < 3:
        raise ValueError("reps must be >= 3")
    if any(n < 1 for n in n_values) or any(d < 1 for d in d_values):
        raise ValueError("n and D values must be >= 1")
    return [bench_cell(n, d, reps, seed, rv) for n in n_values for d in d_values]


def successive_ratios(rows: Iterable[BenchRow], attr: str = "naive_median_s") -> List[float]:
    values = [getattr(r, attr) for r in rows]
    return [b / a for a, b in zip(values, values[1:])]


def to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return buf.getvalue()


def to_text(rows: Iterable[BenchRow]) -> str:
    lines = [f"{'n':>6} {'D':>5} {'naive[s]':>10} {'incr[s]':>10} {'same':>5} {'eu gap':>9}"]
    for r in rows:
        lines.append(
            f"{r.n:>6} {r.deadline:>5} {r.naive_median_s:>10.4f} {r.incremental_median_s:>10.4f} "
            f"{'yes' if r.plans_identical else 'NO':>5} {r.max_eu_gap:>9.2e}"
        )
    return "\n".join(lines)
