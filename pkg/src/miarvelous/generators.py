"""Seeded random planning problems."""

from __future__ import annotations

from typing import Union

import numpy as np

from .core import Bid, NegotiationDomain, NegotiationError, PlanningProblem

CORRELATIONS = ("independent", "inverse")
INVERSE_NOISE = 0.1


class InvalidParams(NegotiationError):
    pass


def random_problem(
    n: int,
    rv_mode: Union[float, str] = 0.0,
    deadline: int = 1,
    seed: int = 0,
    correlation: str = "independent",
) -> PlanningProblem:
    """Draw ``n`` bids with utilities uniform on ``[0, 1]``.

    Parameters
    ----------
    rv_mode : float or "uniform"
        A fixed reservation value, or ``"uniform"`` to draw one on ``[0, 1]``.
    correlation : {"independent", "inverse"}
        ``"independent"`` draws acceptance uniformly; ``"inverse"`` sets it to
        ``1 - utility`` plus uniform noise of at most 0.1, clamped to ``[0, 1]``.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParams(f"n must be a positive integer, got {n!r}")
    if isinstance(deadline, bool) or not isinstance(deadline, (int, np.integer)) or deadline < 1:
        raise InvalidParams(f"deadline must be a positive integer, got {deadline!r}")
    if correlation not in CORRELATIONS:
        raise InvalidParams(f"correlation must be one of {CORRELATIONS}, got {correlation!r}")

    rng = np.random.default_rng(seed)
    utilities = rng.random(n)
    if correlation == "independent":
        acceptance = rng.random(n)
    else:
        noise = rng.uniform(-INVERSE_NOISE, INVERSE_NOISE, n)
        acceptance = np.clip(1.0 - utilities + noise, 0.0, 1.0)

    if rv_mode == "uniform":
        rv = float(rng.random())
    elif isinstance(rv_mode, (int, float)) and not isinstance(rv_mode, bool) and 0.0 <= rv_mode <= 1.0:
        rv = float(rv_mode)
    else:
        raise InvalidParams(f"rv_mode must be a value in [0, 1] or 'uniform', got {rv_mode!r}")

    bids = tuple(Bid(i, float(u), float(a)) for i, (u, a) in enumerate(zip(utilities, acceptance)))
    return PlanningProblem(NegotiationDomain(bids), rv, int(deadline))
