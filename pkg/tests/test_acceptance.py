"""Exit criteria. Each test records one PASS/FAIL line, listed in the terminal summary."""

import random
import time

import pytest

from miarvelous import (
    Bid,
    PlanningProblem,
    expected_utility,
    plan_bruteforce,
    plan_miarvelous,
    random_problem,
    simulate,
    verify_sorted_dominance,
)
from miarvelous.bench import bench_scaling, successive_ratios

from conftest import instance_suite, record

TOL = 1e-12


def test_ac1_one_offer_without_reservation_value(dinner_problem):
    plan = plan_miarvelous(dinner_problem(0.0, 1))
    labels = [b.label for b in plan.sequence]
    ok = labels == ["Fast food"] and abs(plan.expected_utility - 0.27) <= TOL
    assert record("AC1 one offer, rv=0 -> Fast food, EU 0.27", ok, f"{labels} EU={plan.expected_utility!r}")


def test_ac2_one_offer_with_reservation_value(dinner_problem, dinner_domain):
    plan = plan_miarvelous(dinner_problem(0.2, 1))
    labels = [b.label for b in plan.sequence]
    per_bid = [expected_utility([b], 0.2) for b in dinner_domain]
    ok = (
        labels == ["Sushi"]
        and abs(plan.expected_utility - 0.34) <= TOL
        and all(abs(x - y) <= TOL for x, y in zip(per_bid, [0.32, 0.34, 0.29]))
    )
    assert record("AC2 one offer, rv=0.2 -> Sushi, EU 0.34; per-bid 0.32/0.34/0.29", ok,
                  f"{labels} per-bid={[round(x, 12) for x in per_bid]}")


def test_ac3_reservation_value_shifts_to_riskier_offer(dinner_problem):
    before = plan_miarvelous(dinner_problem(0.0, 1)).sequence[0]
    after = plan_miarvelous(dinner_problem(0.2, 1)).sequence[0]
    ok = (
        before.label == "Fast food"
        and after.label == "Sushi"
        and after.utility > before.utility
        and after.acceptance_probability < before.acceptance_probability
    )
    assert record("AC3 raising rv 0 -> 0.2 moves first offer to riskier bid", ok, f"{before.label} -> {after.label}")


@pytest.fixture(scope="module")
def suite_results():
    rows = []
    start = time.perf_counter()
    for problem in instance_suite(copies=2):
        rows.append((problem, plan_miarvelous(problem), plan_bruteforce(problem)))
    return rows, time.perf_counter() - start


def test_ac4_greedy_equals_bruteforce(suite_results):
    rows, elapsed = suite_results
    worst = max(abs(g.expected_utility - o.expected_utility) for _, g, o in rows)
    ok = len(rows) >= 1000 and worst <= 1e-9 and elapsed < 120
    assert record("AC4 planner EU == brute-force EU (n<=8, D<=5)", ok,
                  f"{len(rows)} instances, max gap {worst:.2e}, {elapsed:.1f}s")


def test_ac5_sorted_order_dominates():
    rng = random.Random(20240501)
    failures = 0
    sets = 600
    for _ in range(sets):
        k = rng.randint(1, 6)
        if rng.random() < 0.2:
            # force some equal utilities
            u = rng.random()
            bids = [Bid(i, u if rng.random() < 0.5 else rng.random(), rng.random()) for i in range(k)]
        else:
            bids = [Bid(i, rng.random(), rng.random()) for i in range(k)]
        failures += not verify_sorted_dominance(bids, rng.choice([0.0, rng.random()]))
    assert record("AC5 non-increasing utility order attains the permutation max", failures == 0,
                  f"{sets} sets, {failures} failures")


def test_ac6_bruteforce_never_uses_dominated_bids(suite_results):
    rows, _ = suite_results
    bad = sum(any(b.utility <= p.reservation_value for b in o.sequence) for p, _, o in rows)
    assert record("AC6 brute-force optimum never contains a bid with u <= rv", bad == 0,
                  f"{len(rows)} instances, {bad} violations")


def test_ac7_monotonicity():
    violations = {"deadline": 0, "rv": 0, "floor": 0}
    count = 0
    for seed in range(600):
        n = 1 + seed % 25
        mode = "inverse" if seed % 2 else "independent"
        p = random_problem(n, "uniform", 1 + seed % 7, seed=seed, correlation=mode)
        rv, D = p.reservation_value, p.deadline
        eu = plan_miarvelous(p).expected_utility
        eu_longer = plan_miarvelous(PlanningProblem(p.domain, rv, D + 1)).expected_utility
        rv_hi = min(1.0, rv + random.Random(seed).random() * (1 - rv))
        eu_hi = plan_miarvelous(PlanningProblem(p.domain, rv_hi, D)).expected_utility
        violations["deadline"] += eu_longer < eu - TOL
        violations["rv"] += eu_hi < eu - TOL
        violations["floor"] += eu < rv - TOL
        count += 1
    ok = count >= 500 and not any(violations.values())
    assert record("AC7 EU*(D+1)>=EU*(D), EU*(rv')>=EU*(rv), EU*>=rv", ok, f"{count} instances, violations {violations}")


def test_ac8_monte_carlo_agreement(dinner_problem):
    problem = dinner_problem(0.2, 3)
    exact = plan_bruteforce(problem)
    target = exact.expected_utility
    assert abs(target - 0.4792) <= TOL
    plan = plan_miarvelous(problem).sequence
    hits = 0
    for seed in range(100):
        r = simulate(plan, 0.2, 10_000, seed)
        hits += abs(r.mean_utility - target) <= 4 * r.std_error
    assert record("AC8 Monte Carlo within 4 SE of 0.4792 in >= 99/100 runs", hits >= 99, f"{hits}/100")


def test_ac9_complexity_scaling():
    n_rows = bench_scaling([250, 500, 1000], [50], reps=7, seed=0)
    d_rows = bench_scaling([500], [25, 50, 100], reps=7, seed=0)
    n_ratios = successive_ratios(n_rows)
    d_ratios = successive_ratios(d_rows)
    identical = all(r.plans_identical and r.max_eu_gap <= 1e-9 for r in n_rows + d_rows)
    ok = all(x <= 4.5 for x in n_ratios) and all(x <= 2.25 for x in d_ratios) and identical
    assert record(
        "AC9 naive-path scaling: n-doubling <= 4.5, D-doubling <= 2.25, paths identical",
        ok,
        f"n ratios {[round(x, 2) for x in n_ratios]}, D ratios {[round(x, 2) for x in d_ratios]}, identical={identical}",
    )
