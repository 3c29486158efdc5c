"""Optimal bidding sequences for bilateral negotiation with a reservation value."""

from .core import (
    Bid,
    BidPlan,
    DuplicateId,
    EmptyDomain,
    NegotiationDomain,
    NegotiationError,
    OutOfRange,
    PlanningProblem,
    validate_domain,
)
from .estimator import MIARVelousPlanner, check_bids
from .evaluator import (
    CandidateAlreadyInPlan,
    EvaluationReport,
    evaluate_with_report,
    expected_utility,
    marginal_improvement,
)
from .generators import InvalidParams, random_problem
from .oracle import InstanceTooLarge, plan_bruteforce, verify_sorted_dominance
from .planner import TraceStep, filter_dominated, plan_greedy_trace, plan_miarvelous
from .simulator import SimulationResult, simulate

__version__ = "0.1.0"

__all__ = [
    "Bid",
    "BidPlan",
    "CandidateAlreadyInPlan",
    "DuplicateId",
    "EmptyDomain",
    "EvaluationReport",
    "InstanceTooLarge",
    "InvalidParams",
    "MIARVelousPlanner",
    "NegotiationDomain",
    "NegotiationError",
    "OutOfRange",
    "PlanningProblem",
    "SimulationResult",
    "TraceStep",
    "check_bids",
    "evaluate_with_report",
    "expected_utility",
    "filter_dominated",
    "marginal_improvement",
    "plan_bruteforce",
    "plan_greedy_trace",
    "plan_miarvelous",
    "random_problem",
    "simulate",
    "validate_domain",
    "verify_sorted_dominance",
]
