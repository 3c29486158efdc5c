"""scikit-learn style wrapper around the planner.

``X`` is a bid table of shape ``(n_bids, 2)``: column 0 is our utility,
column 1 the opponent's acceptance probability. Row index is the bid id.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .core import Bid, NegotiationDomain, OutOfRange, PlanningProblem
from .evaluator import expected_utility
from .planner import METHODS, plan_miarvelous


def check_bids(X) -> np.ndarray:
    """Validate a bid table and return it as a float array."""
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 columns (utility, acceptance_probability), got {X.shape[1]}")
    for col, name in enumerate(("utility", "acceptance_probability")):
        bad = np.flatnonzero((X[:, col] < 0.0) | (X[:, col] > 1.0))
        if bad.size:
            raise OutOfRange(name, int(bad[0]), float(X[bad[0], col]))
    return X


def domain_from_array(X, labels=None) -> NegotiationDomain:
    X = check_bids(X)
    return NegotiationDomain.from_pairs(map(tuple, X), labels)


class MIARVelousPlanner(BaseEstimator):
    """Greedy optimal offer planner with a reservation value.

    Parameters
    ----------
    reservation_value : float, default=0.0
        Utility received if no offer is accepted.
    deadline : int, default=1
        Maximum number of offers.
    method : {"incremental", "naive"}, default="incremental"
        Evaluation path used by the greedy loop.

    Attributes
    ----------
    plan_ : BidPlan
    sequence_ : ndarray of int
        Row indices of ``X`` in offer order.
    expected_utility_ : float
    trace_ : list of TraceStep
    n_features_in_ : int
    """

    def __init__(self, reservation_value=0.0, deadline=1, method="incremental"):
        self.reservation_value = reservation_value
        self.deadline = deadline
        self.method = method

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        X = check_bids(X)
        self.n_features_in_ = X.shape[1]
        problem = PlanningProblem(domain_from_array(X), float(self.reservation_value), int(self.deadline))
        self.plan_ = plan_miarvelous(problem, method=self.method)
        self.sequence_ = np.array(self.plan_.ids, dtype=int)
        self.expected_utility_ = self.plan_.expected_utility
        self.trace_ = list(self.plan_.trace)
        return self

    def predict(self, X):
        """Offer round (1-based) of each row of the fitted table; 0 if never offered."""
        check_is_fitted(self, "plan_")
        X = check_bids(X)
        rounds = np.zeros(X.shape[0], dtype=int)
        for rnd, idx in enumerate(self.sequence_, 1):
            if idx < X.shape[0]:
                rounds[idx] = rnd
        return rounds

    def score(self, X, y=None):
        """Expected utility of offering the rows of ``X`` in the given order."""
        check_is_fitted(self, "plan_")
        X = check_bids(X)
        seq = [Bid(i, float(u), float(a)) for i, (u, a) in enumerate(X)]
        return expected_utility(seq, float(self.reservation_value))
