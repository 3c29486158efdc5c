"""Exhaustive reference solver for small instances.

Deliberately shares no evaluation code with :mod:`miarvelous.evaluator`:
expected utility here is the forward sum over acceptance events, not the
backward recurrence.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence, Tuple

from .core import Bid, BidPlan, NegotiationError, PlanningProblem, validate_problem

DEFAULT_MAX_N = 10
DEFAULT_MAX_D = 6
MAX_PERMUTATION_SET = 6


class InstanceTooLarge(NegotiationError):
    pass


def direct_sum_eu(sequence: Sequence[Bid], rv: float) -> float:
    """sum_i u_i a_i prod_{j<i}(1 - a_j) + rv prod_j (1 - a_j)."""
    total = 0.0
    for i, bid in enumerate(sequence):
        reach = 1.0
        for prev in sequence[:i]:
            reach *= 1.0 - prev.acceptance_probability
        total += bid.utility * bid.acceptance_probability * reach
    fallback = 1.0
    for bid in sequence:
        fallback *= 1.0 - bid.acceptance_probability
    return total + rv * fallback


def _better(eu, ids, best_eu, best_ids) -> bool:
    if eu != best_eu:
        return eu > best_eu
    return (len(ids), ids) < (len(best_ids), best_ids)


def plan_bruteforce(
    problem: PlanningProblem, max_n: int = DEFAULT_MAX_N, max_D: int = DEFAULT_MAX_D
) -> BidPlan:
    """Best duplicate-free sequence of length ``0..min(D, n)`` by full enumeration.

    Searches the unfiltered domain. Ties go to the shorter sequence, then to
    the lexicographically smaller id tuple.
    """
    validate_problem(problem)
    bids = problem.domain.bids
    n, D = len(bids), problem.deadline
    if n > max_n or D > max_D:
        raise InstanceTooLarge(f"n={n}, D={D} exceeds guards max_n={max_n}, max_D={max_D}")
    rv = problem.reservation_value
    limit = min(D, n)

    best_eu = rv
    best_ids: Tuple[int, ...] = ()

    # depth-first over ordered sequences; the partial sum and survival are
    # carried along the prefix so each node costs O(1)
    def visit(prefix_ids, used, acc, survival):
        nonlocal best_eu, best_ids
        eu = acc + rv * survival
        ids = tuple(prefix_ids)
        if _better(eu, ids, best_eu, best_ids):
            best_eu, best_ids = eu, ids
        if len(prefix_ids) == limit:
            return
        for idx, bid in enumerate(bids):
            if used[idx]:
                continue
            used[idx] = True
            prefix_ids.append(bid.id)
            a = bid.acceptance_probability
            visit(prefix_ids, used, acc + bid.utility * a * survival, survival * (1.0 - a))
            prefix_ids.pop()
            used[idx] = False

    visit([], [False] * n, 0.0, 1.0)
    sequence = tuple(problem.domain.by_id(i) for i in best_ids)
    return BidPlan(sequence, best_eu, rv)


def best_subset_value(problem: PlanningProblem) -> float:
    """Optimum over subsets offered in non-increasing utility order.

    Agrees with :func:`plan_bruteforce` exactly when sorted order is never
    beaten by another ordering of the same set.
    """
    bids = problem.domain.bids
    rv = problem.reservation_value
    limit = min(problem.deadline, len(bids))
    ordered = sorted(bids, key=lambda b: -b.utility)
    best = rv
    n = len(ordered)
    for mask in range(1, 1 << n):
        if bin(mask).count("1") > limit:
            continue
        subset = [ordered[i] for i in range(n) if mask >> i & 1]
        best = max(best, direct_sum_eu(subset, rv))
    return best


def verify_sorted_dominance(bid_set: Sequence[Bid], rv: float, tol: float = 1e-12) -> bool:
    """True iff the non-increasing-utility order attains the best EU over all orderings.

    ``tol`` absorbs rounding between mathematically equal orderings (for
    example two bids with equal utility swapped).
    """
    bid_set = list(bid_set)
    if len(bid_set) > MAX_PERMUTATION_SET:
        raise InstanceTooLarge(f"{len(bid_set)} bids, at most {MAX_PERMUTATION_SET} allowed")
    sorted_eu = direct_sum_eu(sorted(bid_set, key=lambda b: -b.utility), rv)
    best = max(direct_sum_eu(p, rv) for p in permutations(bid_set))
    return sorted_eu >= best - tol
