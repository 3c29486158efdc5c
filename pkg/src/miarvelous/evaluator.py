"""Exact expected utility of an offer sequence ending in the reservation value."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import Bid, NegotiationError, check_unique

#: tolerance used by consistency checks that compare two computations of the same quantity
EPS = 1e-12


class CandidateAlreadyInPlan(NegotiationError):
    def __init__(self, bid_id: int):
        self.bid_id = bid_id
        super().__init__(f"bid {bid_id} is already in the plan")


@dataclass(frozen=True)
class EvaluationReport:
    """Cached quantities for a fixed plan.

    ``survival_prefix[i]`` is the probability that offers ``0..i`` were all
    rejected; ``suffix_value[i]`` is the expected utility of continuing from
    position ``i``, with ``suffix_value[k] == rv``.
    """

    expected_utility: float
    survival_prefix: Tuple[float, ...]
    suffix_value: Tuple[float, ...]

    def survival_before(self, position: int) -> float:
        return 1.0 if position == 0 else self.survival_prefix[position - 1]


def expected_utility(plan: Sequence[Bid], rv: float) -> float:
    """Expected utility of offering ``plan`` in the given order, falling back to ``rv``.

    Uses the backward recurrence ``V_i = a_i*u_i + (1 - a_i)*V_{i+1}`` with
    ``V_{k+1} = rv``. The plan is not re-sorted.
    """
    check_unique(plan)
    value = rv
    for bid in reversed(plan):
        a = bid.acceptance_probability
        value = a * bid.utility + (1.0 - a) * value
    return value


def evaluate_with_report(plan: Sequence[Bid], rv: float) -> EvaluationReport:
    check_unique(plan)
    k = len(plan)
    suffix: List[float] = [0.0] * (k + 1)
    suffix[k] = rv
    for i in range(k - 1, -1, -1):
        a = plan[i].acceptance_probability
        suffix[i] = a * plan[i].utility + (1.0 - a) * suffix[i + 1]
    survival: List[float] = []
    s = 1.0
    for bid in plan:
        s *= 1.0 - bid.acceptance_probability
        survival.append(s)
    return EvaluationReport(suffix[0], tuple(survival), tuple(suffix))


def insertion_position(plan: Sequence[Bid], utility: float) -> int:
    """Index keeping ``plan`` sorted by non-increasing utility; equal utilities stay in front."""
    lo, hi = 0, len(plan)
    while lo < hi:
        mid = (lo + hi) // 2
        if plan[mid].utility >= utility:
            lo = mid + 1
        else:
            hi = mid
    return lo


def marginal_improvement(
    plan: Sequence[Bid], candidate: Bid, rv: float, report: EvaluationReport
) -> Tuple[float, int]:
    """Gain in expected utility from inserting ``candidate`` at its sorted position.

    ``plan`` must be sorted by non-increasing utility and ``report`` must have
    been computed for it with the same ``rv``. Returns ``(delta, position)``.
    """
    for bid in plan:
        if bid.id == candidate.id:
            raise CandidateAlreadyInPlan(candidate.id)
    return _marginal_improvement(plan, candidate, report)


def _marginal_improvement(plan, candidate, report):
    # caller guarantees candidate is not in plan
    position = insertion_position(plan, candidate.utility)
    delta = (
        report.survival_before(position)
        * candidate.acceptance_probability
        * (candidate.utility - report.suffix_value[position])
    )
    return delta, position
