"""Reading and writing problem files.

A problem file is a JSON document::

    {
      "bids": [
        {"id": 0, "label": "Italian", "utility": 0.5, "acceptance_probability": 0.4},
        ...
      ],
      "reservation_value": 0.2,
      "deadline": 3
    }

``id`` and ``label`` are optional; missing ids are the bid's array index.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Union

from .core import (
    Bid,
    BidPlan,
    NegotiationDomain,
    NegotiationError,
    PlanningProblem,
    validate_domain,
)

PathLike = Union[str, Path]


class ParseError(NegotiationError):
    def __init__(self, message: str, field: str = None, line: int = None):
        self.field = field
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


def _number(obj: Dict[str, Any], key: str, context: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r} in {context}", field=key)
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"field {key!r} in {context} must be a number, got {value!r}", field=key)
    return value


def problem_from_dict(data: Any) -> PlanningProblem:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    if "bids" not in data:
        raise ParseError("missing field 'bids'", field="bids")
    if not isinstance(data["bids"], list):
        raise ParseError("field 'bids' must be an array", field="bids")
    bids = []
    for index, raw in enumerate(data["bids"]):
        context = f"bids[{index}]"
        if not isinstance(raw, dict):
            raise ParseError(f"{context} must be an object", field="bids")
        bid_id = raw.get("id", index)
        if isinstance(bid_id, bool) or not isinstance(bid_id, int) or bid_id < 0:
            raise ParseError(f"{context}.id must be a non-negative integer", field="id")
        label = raw.get("label")
        if label is not None and not isinstance(label, str):
            raise ParseError(f"{context}.label must be a string", field="label")
        bids.append(
            Bid(
                id=bid_id,
                utility=float(_number(raw, "utility", context)),
                acceptance_probability=float(_number(raw, "acceptance_probability", context)),
                label=label,
            )
        )
    domain = validate_domain(NegotiationDomain(tuple(bids)))
    rv = float(_number(data, "reservation_value", "problem"))
    deadline = _number(data, "deadline", "problem")
    if not isinstance(deadline, int):
        raise ParseError(f"field 'deadline' must be an integer, got {deadline!r}", field="deadline")
    return PlanningProblem(domain, rv, deadline)


def loads_problem(text: str) -> PlanningProblem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    return problem_from_dict(data)


def parse_problem_file(path: PathLike) -> PlanningProblem:
    return loads_problem(Path(path).read_text())


def problem_to_dict(problem: PlanningProblem) -> Dict[str, Any]:
    bids = []
    for b in problem.domain.bids:
        entry: Dict[str, Any] = {"id": b.id}
        if b.label is not None:
            entry["label"] = b.label
        entry["utility"] = b.utility
        entry["acceptance_probability"] = b.acceptance_probability
        bids.append(entry)
    return {
        "bids": bids,
        "reservation_value": problem.reservation_value,
        "deadline": problem.deadline,
    }


def dumps_problem(problem: PlanningProblem) -> str:
    # json writes floats with repr, the shortest string that round-trips
    return json.dumps(problem_to_dict(problem), indent=2) + "\n"


def write_problem_file(problem: PlanningProblem, path: PathLike) -> None:
    Path(path).write_text(dumps_problem(problem))


def plan_to_dict(plan: BidPlan) -> Dict[str, Any]:
    return {
        "sequence": [
            {"id": b.id, "label": b.label, "utility": b.utility, "acceptance_probability": b.acceptance_probability}
            for b in plan.sequence
        ],
        "expected_utility": plan.expected_utility,
        "reservation_value": plan.reservation_value,
        "trace": [step._asdict() for step in plan.trace],
    }
