"""Greedy marginal-improvement planning of an offer sequence.

Each step adds the unused bid whose insertion (at its sorted position) raises
the expected utility the most. Two evaluation paths are provided:

``"naive"``
    re-evaluates every candidate set from scratch over the utility-sorted
    domain, O(n) per candidate and O(n^2 D) overall.
``"incremental"``
    scores a candidate in O(log k) from a cached :class:`EvaluationReport`.

Both pick the same bids; the incremental path is the default.
"""

from __future__ import annotations

from typing import List, NamedTuple, Tuple

import numpy as np

from .core import Bid, BidPlan, NegotiationDomain, PlanningProblem, validate_problem
from .evaluator import _marginal_improvement, evaluate_with_report, expected_utility

METHODS = ("incremental", "naive")


class TraceStep(NamedTuple):
    step: int
    bid_id: int
    delta: float
    expected_utility: float


def filter_dominated(domain: NegotiationDomain, rv: float) -> NegotiationDomain:
    """Drop bids with utility ``<= rv``; they can never raise expected utility."""
    return NegotiationDomain(tuple(b for b in domain.bids if b.utility > rv))


def _sorted_by_utility(selected: List[Bid]) -> Tuple[Bid, ...]:
    # stable: equal utilities keep selection order, matching insertion after ties
    return tuple(sorted(selected, key=lambda b: -b.utility))


def _greedy_incremental(candidates: List[Bid], rv: float, deadline: int):
    plan: List[Bid] = []
    used = set()
    report = evaluate_with_report(plan, rv)
    trace = []
    for step in range(1, deadline + 1):
        best = None
        best_delta = 0.0
        best_pos = 0
        for cand in candidates:
            if cand.id in used:
                continue
            delta, pos = _marginal_improvement(plan, cand, report)
            if best is None or delta > best_delta:
                best, best_delta, best_pos = cand, delta, pos
        if best is None or not best_delta > 0.0:
            break
        plan.insert(best_pos, best)
        used.add(best.id)
        report = evaluate_with_report(plan, rv)
        trace.append(TraceStep(step, best.id, best_delta, report.expected_utility))
    return trace


def _terms(u: np.ndarray, a: np.ndarray):
    """Per-position contributions ``u_i a_i prod_{j<i}(1 - a_j)`` and final survival."""
    surv = np.cumprod(1.0 - a)
    before = np.empty_like(surv)
    if surv.size:
        before[0] = 1.0
        before[1:] = surv[:-1]
    return u * a * before, (surv[-1] if surv.size else 1.0)


def _masked_gain(u, a, mask, old_terms, old_surv, pos, rv) -> float:
    """EU(sorted S + c) - EU(sorted S), both sequences evaluated from scratch.

    The two term vectors are subtracted position by position rather than as
    totals, so gains far below the resolution of EU itself keep their sign.
    """
    trial = mask.copy()
    trial[pos] = True
    new_terms, new_surv = _terms(u[trial], a[trial])
    p = int(np.count_nonzero(mask[:pos]))
    gain = new_terms[p] + rv * (new_surv - old_surv)
    if p:
        gain += float(np.sum(new_terms[:p] - old_terms[:p]))
    if p < old_terms.size:
        gain += float(np.sum(new_terms[p + 1:] - old_terms[p:]))
    return float(gain)


def _greedy_naive(candidates: List[Bid], rv: float, deadline: int):
    # domain pre-sorted once; a subset's sorted plan is then the masked slice
    order = sorted(range(len(candidates)), key=lambda i: -candidates[i].utility)
    pos_of = {candidates[i].id: p for p, i in enumerate(order)}
    u = np.array([candidates[i].utility for i in order], dtype=float)
    a = np.array([candidates[i].acceptance_probability for i in order], dtype=float)
    mask = np.zeros(len(candidates), dtype=bool)
    trace = []
    for step in range(1, deadline + 1):
        old_terms, old_surv = _terms(u[mask], a[mask])
        best = None
        best_gain = 0.0
        for cand in candidates:
            p = pos_of[cand.id]
            if mask[p]:
                continue
            gain = _masked_gain(u, a, mask, old_terms, old_surv, p, rv)
            if best is None or gain > best_gain:
                best, best_gain = cand, gain
        if best is None or not best_gain > 0.0:
            break
        mask[pos_of[best.id]] = True
        terms, surv = _terms(u[mask], a[mask])
        trace.append(TraceStep(step, best.id, best_gain, float(np.sum(terms) + rv * surv)))
    return trace


def plan_greedy_trace(problem: PlanningProblem, method: str = "incremental") -> List[TraceStep]:
    """Per-step record of the greedy loop: which bid was added, its gain, and the new EU."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    validate_problem(problem)
    rv = problem.reservation_value
    # id order makes the first strict maximum the lowest id on ties
    candidates = sorted(filter_dominated(problem.domain, rv).bids, key=lambda b: b.id)
    if method == "naive":
        return _greedy_naive(candidates, rv, problem.deadline)
    return _greedy_incremental(candidates, rv, problem.deadline)


def plan_miarvelous(problem: PlanningProblem, method: str = "incremental") -> BidPlan:
    """Optimal offer sequence for ``problem`` under its static acceptance model.

    The returned sequence is sorted by non-increasing utility, has at most
    ``min(deadline, n)`` bids and may be empty, in which case its expected
    utility is the reservation value.
    """
    trace = plan_greedy_trace(problem, method=method)
    chosen = [problem.domain.by_id(step.bid_id) for step in trace]
    sequence = _sorted_by_utility(chosen)
    rv = problem.reservation_value
    return BidPlan(sequence, expected_utility(sequence, rv), rv, trace=tuple(trace))
