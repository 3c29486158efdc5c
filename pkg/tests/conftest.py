import itertools

import pytest

from miarvelous import Bid, NegotiationDomain, PlanningProblem, random_problem

ITALIAN = Bid(0, 0.5, 0.4, "Italian")
SUSHI = Bid(1, 0.9, 0.2, "Sushi")
FAST_FOOD = Bid(2, 0.3, 0.9, "Fast food")

ACCEPTANCE_LINES = []


@pytest.fixture
def dinner_domain():
    return NegotiationDomain((ITALIAN, SUSHI, FAST_FOOD))


@pytest.fixture
def dinner_problem(dinner_domain):
    def make(rv, deadline):
        return PlanningProblem(dinner_domain, rv, deadline)

    return make


def instance_suite(copies=2):
    """n <= 8, D <= 5, both generator modes, rv in {0, 0.1, ..., 0.9}."""
    rvs = [i / 10 for i in range(10)]
    seed = 0
    for rv, mode, n, deadline, _ in itertools.product(
        rvs, ("independent", "inverse"), range(1, 9), range(1, 6), range(copies)
    ):
        seed += 1
        yield random_problem(n, rv, deadline, seed=seed, correlation=mode)


def record(criterion, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
