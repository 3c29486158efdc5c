"""Command line interface: ``miarvelous <subcommand> ...``.

Exit codes: 0 success, 2 parse/validation error, 3 oracle-check mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import bench as bench_mod
from .core import DuplicateId, NegotiationError, check_unique
from .evaluator import expected_utility
from .generators import random_problem
from .io import dumps_problem, parse_problem_file, plan_to_dict
from .oracle import DEFAULT_MAX_D, DEFAULT_MAX_N, plan_bruteforce
from .planner import METHODS, plan_miarvelous
from .simulator import simulate

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
ORACLE_TOL = 1e-9


class UsageError(NegotiationError):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _label(bid) -> str:
    return bid.label if bid.label is not None else ""


def _describe(bid) -> str:
    return f"{bid.label} (id {bid.id})" if bid.label is not None else f"id {bid.id}"


def cmd_plan(args) -> int:
    problem = parse_problem_file(args.file)
    plan = plan_miarvelous(problem, method=args.method)
    if args.format == "json":
        print(json.dumps(plan_to_dict(plan), indent=2))
        return EXIT_OK
    position = {bid.id: i for i, bid in enumerate(plan.sequence)}
    if args.format == "csv":
        rows = []
        for step in plan.trace:
            bid = problem.domain.by_id(step.bid_id)
            rows.append(
                [step.step, bid.id, _label(bid), repr(bid.utility), repr(bid.acceptance_probability),
                 repr(step.delta), repr(step.expected_utility), position[bid.id]]
            )
        print(_csv(["step", "id", "label", "utility", "acceptance_probability", "delta",
                    "expected_utility", "position"], rows))
        return EXIT_OK
    print(f"reservation value {problem.reservation_value}, deadline {problem.deadline}, "
          f"{len(problem.domain)} bids")
    for step in plan.trace:
        bid = problem.domain.by_id(step.bid_id)
        print(f"  step {step.step}: add {_describe(bid)}  delta={step.delta:.6g}  "
              f"EU={step.expected_utility:.6g}")
    print("plan:")
    for i, bid in enumerate(plan.sequence, 1):
        print(f"  {i}. {_describe(bid)}: u={bid.utility:g}, a={bid.acceptance_probability:g}")
    if not plan.sequence:
        print("  (empty: no bid beats the reservation value)")
    print(f"expected utility: {plan.expected_utility:.12g}")
    return EXIT_OK


def _sequence(problem, raw: str):
    try:
        ids = [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--sequence must be comma-separated ids, got {raw!r}")
    try:
        seq = [problem.domain.by_id(i) for i in ids]
    except KeyError as exc:
        raise UsageError(f"unknown bid id {exc.args[0]}")
    check_unique(seq)
    return seq


def cmd_evaluate(args) -> int:
    problem = parse_problem_file(args.file)
    seq = _sequence(problem, args.sequence)
    eu = expected_utility(seq, problem.reservation_value)
    if args.format == "json":
        print(json.dumps({"sequence": [b.id for b in seq], "expected_utility": eu}))
    elif args.format == "csv":
        print(_csv(["sequence", "expected_utility"], [[" ".join(str(b.id) for b in seq), repr(eu)]]))
    else:
        print(f"expected utility: {eu:.12g}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    problem = parse_problem_file(args.file)
    if args.sequence is not None:
        seq = _sequence(problem, args.sequence)
    else:
        seq = list(plan_miarvelous(problem).sequence)
    result = simulate(seq, problem.reservation_value, args.trials, args.seed, threads=args.threads)
    analytic = expected_utility(seq, problem.reservation_value)
    fields = {
        "sequence": [b.id for b in seq],
        "trials": result.trials,
        "seed": result.seed,
        "mean_utility": result.mean_utility,
        "std_error": result.std_error,
        "agreement_rate": result.agreement_rate,
        "acceptance_counts": list(result.acceptance_counts),
        "analytic_expected_utility": analytic,
    }
    if args.format == "json":
        print(json.dumps(fields))
    elif args.format == "csv":
        print(_csv(list(fields), [[" ".join(map(str, v)) if isinstance(v, list) else repr(v)
                                   for v in fields.values()]]))
    else:
        print(f"sequence: {', '.join(b.name for b in seq) or '(empty)'}")
        print(f"trials {result.trials}, seed {result.seed}")
        print(f"mean utility {result.mean_utility:.6f} +/- {result.std_error:.6f} (analytic {analytic:.6f})")
        print(f"agreement rate {result.agreement_rate:.4f}, per position {list(result.acceptance_counts)}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    problem = parse_problem_file(args.file)
    greedy = plan_miarvelous(problem)
    exact = plan_bruteforce(problem, max_n=args.max_n, max_D=args.max_d)
    ok = abs(greedy.expected_utility - exact.expected_utility) <= ORACLE_TOL
    status = "PASS" if ok else "FAIL"
    if args.format == "json":
        print(json.dumps({"status": status, "planner_expected_utility": greedy.expected_utility,
                          "oracle_expected_utility": exact.expected_utility,
                          "planner_sequence": list(greedy.ids), "oracle_sequence": list(exact.ids)}))
    elif args.format == "csv":
        print(_csv(["status", "planner_expected_utility", "oracle_expected_utility",
                    "planner_sequence", "oracle_sequence"],
                   [[status, repr(greedy.expected_utility), repr(exact.expected_utility),
                     " ".join(map(str, greedy.ids)), " ".join(map(str, exact.ids))]]))
    else:
        print(f"planner {list(greedy.ids)} EU={greedy.expected_utility:.12g}")
        print(f"oracle  {list(exact.ids)} EU={exact.expected_utility:.12g}")
        print(status)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_generate(args) -> int:
    rv = "uniform" if args.rv == "uniform" else float(args.rv)
    problem = random_problem(
        args.n, rv, args.deadline, seed=args.seed,
        correlation="inverse" if args.inverse else "independent",
    )
    text = dumps_problem(problem)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = bench_mod.bench_scaling(args.n, args.d, reps=args.reps, seed=args.seed, rv=args.rv)
    if args.format == "csv":
        print(bench_mod.to_csv(rows), end="")
    elif args.format == "json":
        print(json.dumps([r.__dict__ for r in rows], indent=2))
    else:
        print(bench_mod.to_text(rows))
        if len(args.n) > 1:
            print("naive ratios along n:", [f"{r:.2f}" for r in bench_mod.successive_ratios(rows[:: len(args.d)])])
        if len(args.d) > 1:
            print("naive ratios along D:", [f"{r:.2f}" for r in bench_mod.successive_ratios(rows[: len(args.d)])])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="miarvelous",
        description="Optimal offer sequences for negotiation with a reservation value",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("plan", cmd_plan, "compute the optimal plan")
    p.add_argument("--method", choices=METHODS, default="incremental")

    p = add("evaluate", cmd_evaluate, "expected utility of a given sequence, in the given order")
    p.add_argument("--sequence", required=True, help="comma-separated bid ids")

    p = add("simulate", cmd_simulate, "Monte Carlo run of the optimal (or a given) plan")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--sequence", default=None, help="simulate these ids instead of the optimal plan")

    p = add("oracle-check", cmd_oracle_check, "compare the planner with brute force")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-d", type=int, default=DEFAULT_MAX_D)

    p = add("generate", cmd_generate, "write a random problem file", with_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inverse", action="store_true", help="anti-correlate utility and acceptance")
    p.add_argument("--rv", default="0.0", help="reservation value or 'uniform'")
    p.add_argument("--deadline", type=int, default=1)
    p.add_argument("--output", "-o", default=None)

    p = add("bench", cmd_bench, "time both planner paths over an (n, D) grid", with_file=False)
    p.add_argument("--n", type=_int_list, default=[250, 500, 1000])
    p.add_argument("--d", type=_int_list, default=[50])
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rv", type=float, default=0.0)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NegotiationError, OSError, ValueError) as exc:
        kind = "duplicate id" if isinstance(exc, DuplicateId) else type(exc).__name__
        print(f"error ({kind}): {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
