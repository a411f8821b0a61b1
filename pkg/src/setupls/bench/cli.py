"""Command line entry point: ``setupls {solve,verify,gen,oracle}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from .. import baselines, hillclimb
from ..edds import STARTS, CapacityError
from ..model import evaluate
from .io import FormatError, format_instance, parse_schedule, read_instance
from .oracle import oracle_optimal
from .tanaka import adapt_tanaka, metric_setup_matrix, random_pairs, read_pairs

ALGOS = ("win", "win-swap", "mw", "mw-swap", "pils1", "gad", "mga")
CSV_COLUMNS = ("instance", "algo", "start", "seed", "tardiness", "makespan", "total_setup", "wall_ms")
DEFAULT_TIME_LIMIT = 1200.0


def solve_once(instance, algo, start_name, time_limit, seed, k_init=4, k_max=None,
               population=100, max_iters=None):
    """One run; returns a JSON-ready dict."""
    t0 = time.perf_counter()
    start = STARTS[start_name](instance)
    if algo in hillclimb.VARIANTS:
        cfg = hillclimb.StrategyConfig(algo, k_init=k_init, k_max=k_max, time_limit=time_limit)
        report = hillclimb.run(instance, start, cfg)
    elif algo == "pils1":
        report = baselines.run_pils1(instance, start, time_limit, seed=seed, max_iters=max_iters)
    else:
        cfg = baselines.GaConfig(population=population, seed=seed)
        fn = baselines.run_gad if algo == "gad" else baselines.run_mga
        report = fn(instance, cfg, time_limit, max_generations=max_iters)
    ev = evaluate(instance, report.schedule)
    out = report.to_dict()
    out.update(seed=seed, total_setup=ev.total_setup, feasible=ev.feasible,
               wall_ms=round((time.perf_counter() - t0) * 1000, 3))
    return out


def _best_of(runs):
    return min(runs, key=lambda r: (r["objective"]["tardiness"], r["objective"]["makespan"]))


def cmd_solve(args) -> int:
    instance = read_instance(args.instance)
    t0 = time.perf_counter()
    runs = [solve_once(instance, args.algo, args.start, args.time_limit, args.seed + i,
                       k_init=args.k_init, k_max=args.k_max, population=args.population,
                       max_iters=args.max_iters)
            for i in range(args.repeats)]
    best = _best_of(runs)
    if args.out == "json":
        doc = {
            "instance": instance.name or str(args.instance),
            "config": {"algo": args.algo, "start": args.start, "time_limit": args.time_limit,
                       "seed": args.seed, "k_init": args.k_init, "k_max": args.k_max,
                       "repeats": args.repeats, "population": args.population,
                       "max_iters": args.max_iters},
            "best": best,
            "runs": runs,
            "wall_ms": round((time.perf_counter() - t0) * 1000, 3),
        }
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerow([instance.name or args.instance, args.algo, args.start, best["seed"],
                    best["objective"]["tardiness"], best["objective"]["makespan"],
                    best["total_setup"], best["wall_ms"]])
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    instance = read_instance(args.instance)
    schedule = parse_schedule(Path(args.schedule).read_text())
    ev = evaluate(instance, schedule)
    print(f"makespan {ev.makespan}")
    print(f"tardiness {ev.total_tardiness}")
    print(f"total_setup {ev.total_setup}")
    print(f"feasible {'yes' if ev.feasible else 'no'}")
    return 0


def cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    if args.setup:
        setup = read_instance_matrix(args.setup)
    else:
        setup = metric_setup_matrix(args.types, rng)
    if args.pairs:
        pairs = read_pairs(args.pairs)
    else:
        pairs = random_pairs(args.n, rng, args.tardiness_factor, args.due_range)
    inst = adapt_tanaka(pairs, setup, type_count=args.types, scale=args.scale, seed=args.seed)
    text = format_instance(inst)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def read_instance_matrix(path) -> list[list[int]]:
    rows = []
    for raw in Path(path).read_text().splitlines():
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append([int(v) for v in body])
    return rows


def cmd_oracle(args) -> int:
    instance = read_instance(args.instance)
    res = oracle_optimal(instance)
    print(json.dumps({"tardiness": res.objective.tardiness, "makespan": res.objective.makespan,
                      "schedule": list(res.schedule), "optimal_count": res.count}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setupls", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run a heuristic on an instance file")
    p.add_argument("--instance", required=True)
    p.add_argument("--algo", choices=ALGOS, default="win-swap")
    p.add_argument("--start", choices=sorted(STARTS), default="dd")
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-init", type=int, default=4)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--population", type=int, default=100)
    p.add_argument("--max-iters", type=int, default=None,
                   help="iteration/generation cap for the randomized baselines")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="evaluate a schedule file")
    p.add_argument("--instance", required=True)
    p.add_argument("--schedule", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="build a typed instance from (p, d) pairs")
    p.add_argument("--pairs", help="two-column processing_time/deadline file")
    p.add_argument("--n", type=int, default=50, help="random pairs when --pairs is absent")
    p.add_argument("--tardiness-factor", type=float, default=0.2)
    p.add_argument("--due-range", type=float, default=0.6)
    p.add_argument("--types", type=int, default=8)
    p.add_argument("--scale", type=int, default=50)
    p.add_argument("--setup", help="setup matrix file (t rows of t integers)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive optimum (n <= 10)")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    if getattr(args, "repeats", 1) < 1:
        parser.error("--repeats must be at least 1")
    try:
        return args.func(args)
    except (CapacityError, FormatError, ValueError, OSError) as exc:
        print(f"setupls: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
