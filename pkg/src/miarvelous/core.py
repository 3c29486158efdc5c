"""Domain types shared by every other module.

All types are frozen dataclasses; nothing mutates after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple


class NegotiationError(ValueError):
    """Base class for validation failures."""


class DuplicateId(NegotiationError):
    def __init__(self, bid_id: int):
        self.bid_id = bid_id
        super().__init__(f"duplicate bid id {bid_id}")


class OutOfRange(NegotiationError):
    def __init__(self, field_name: str, bid_id, value):
        self.field_name = field_name
        self.bid_id = bid_id
        self.value = value
        super().__init__(f"{field_name}={value!r} of bid {bid_id} is outside [0, 1]")


class EmptyDomain(NegotiationError):
    def __init__(self):
        super().__init__("negotiation domain has no bids")


class InvalidProblem(NegotiationError):
    pass


def _in_unit_interval(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) and 0.0 <= x <= 1.0


@dataclass(frozen=True)
class Bid:
    """One outcome with our utility and the opponent's acceptance probability."""

    id: int
    utility: float
    acceptance_probability: float
    label: Optional[str] = None

    @property
    def name(self) -> str:
        return self.label if self.label is not None else str(self.id)


@dataclass(frozen=True)
class NegotiationDomain:
    bids: Tuple[Bid, ...]

    def __post_init__(self):
        # accept any iterable but always store a tuple
        object.__setattr__(self, "bids", tuple(self.bids))

    def __len__(self) -> int:
        return len(self.bids)

    def __iter__(self):
        return iter(self.bids)

    def by_id(self, bid_id: int) -> Bid:
        for bid in self.bids:
            if bid.id == bid_id:
                return bid
        raise KeyError(bid_id)

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(b.id for b in self.bids)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[float, float]], labels: Optional[Sequence[str]] = None):
        """Build a domain from ``(utility, acceptance_probability)`` pairs, ids by position."""
        pairs = list(pairs)
        if labels is None:
            labels = [None] * len(pairs)
        return cls(
            tuple(
                Bid(id=i, utility=float(u), acceptance_probability=float(a), label=lab)
                for i, ((u, a), lab) in enumerate(zip(pairs, labels))
            )
        )


@dataclass(frozen=True)
class PlanningProblem:
    domain: NegotiationDomain
    reservation_value: float
    deadline: int

    def __post_init__(self):
        if not _in_unit_interval(self.reservation_value):
            raise OutOfRange("reservation_value", None, self.reservation_value)
        if isinstance(self.deadline, bool) or not isinstance(self.deadline, int) or self.deadline < 1:
            raise InvalidProblem(f"deadline must be a positive integer, got {self.deadline!r}")


@dataclass(frozen=True)
class BidPlan:
    """An ordered, duplicate-free offer sequence and its expected utility."""

    sequence: Tuple[Bid, ...]
    expected_utility: float
    reservation_value: float = 0.0
    trace: Tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(b.id for b in self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)


def validate_domain(raw: NegotiationDomain) -> NegotiationDomain:
    """Check domain invariants and return the domain unchanged.

    Raises
    ------
    EmptyDomain
        If there are no bids.
    DuplicateId
        On the first repeated id, in input order.
    OutOfRange
        If a utility or acceptance probability falls outside ``[0, 1]``.
    """
    if len(raw.bids) == 0:
        raise EmptyDomain()
    seen = set()
    for bid in raw.bids:
        if isinstance(bid.id, bool) or not isinstance(bid.id, int) or bid.id < 0:
            raise NegotiationError(f"bid id must be a non-negative integer, got {bid.id!r}")
        if bid.id in seen:
            raise DuplicateId(bid.id)
        seen.add(bid.id)
        if not _in_unit_interval(bid.utility):
            raise OutOfRange("utility", bid.id, bid.utility)
        if not _in_unit_interval(bid.acceptance_probability):
            raise OutOfRange("acceptance_probability", bid.id, bid.acceptance_probability)
    return raw


def validate_problem(problem: PlanningProblem) -> PlanningProblem:
    validate_domain(problem.domain)
    return problem


def check_unique(sequence: Sequence[Bid]) -> None:
    seen = set()
    for bid in sequence:
        if bid.id in seen:
            raise DuplicateId(bid.id)
        seen.add(bid.id)
