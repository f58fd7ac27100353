"""Command-line interface: instance inspection, evaluation, landscape runs
and throughput measurement.

Exit codes: 0 success, 2 usage or parse error, 3 evaluation failure.
Vector files hold whitespace- or comma-separated decimals, one vector per
line, with '#' comments.  Values print with 17 significant digits so they
round-trip exactly.  GTOPX_THREADS sets the default worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import landscape
from .problems import (
    DimensionError,
    EvaluationError,
    UnknownBenchmarkError,
    evaluate,
    evaluate_many,
    info,
    instance_ids,
    is_feasible,
)

USAGE_ERROR = 2
EVAL_ERROR = 3


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _parse_vector_text(text: str) -> np.ndarray:
    values = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if line:
            values.extend(float(v) for v in line.split())
    if not values:
        raise ValueError("no numeric data found")
    return np.array(values)


def _read_vector(args) -> np.ndarray:
    if args.x is not None:
        return _parse_vector_text(args.x)
    return _parse_vector_text(Path(args.file).read_text(encoding="utf-8"))


def _default_threads() -> int | None:
    env = os.environ.get("GTOPX_THREADS")
    return int(env) if env else None


def cmd_info(args) -> int:
    if args.benchmark is None:
        print(f"{'id':>3} {'name':24} {'obj':>3} {'var':>4} {'con':>4} {'best known':>12}")
        for pid in instance_ids():
            spec = info(pid)
            best = _fmt(spec.best_known_f) if spec.best_known_f is not None else "na"
            print(f"{spec.id:>3} {spec.name:24} {spec.n_obj:>3} {spec.n:>4} {spec.m:>4} {best:>12}")
        return 0
    spec = info(args.benchmark)
    best = _fmt(spec.best_known_f) if spec.best_known_f is not None else "na"
    print(f"benchmark {spec.id}: {spec.name}")
    print(f"objectives:  {spec.n_obj}")
    print(f"variables:   {spec.n} ({spec.n_cont} continuous, {spec.n_int} integer)")
    print(f"constraints: {spec.m}")
    print(f"sequence:    {' '.join(str(b) for b in spec.sequence)}")
    print(f"best known:  {best}")
    print("bounds:")
    for i, (lo, hi) in enumerate(zip(spec.lb, spec.ub), start=1):
        print(f"  x{i:<3} {_fmt(lo):>24} {_fmt(hi):>24}")
    return 0


def cmd_eval(args) -> int:
    spec = info(args.benchmark)
    x = _read_vector(args)
    if x.shape != (spec.n,):
        print(f"error: benchmark {spec.id} expects {spec.n} variables, got {len(x)}",
              file=sys.stderr)
        return USAGE_ERROR
    if np.any(x < spec.lb) or np.any(x > spec.ub):
        print("warning: vector lies outside the benchmark bounds", file=sys.stderr)
    try:
        result = evaluate(spec.id, x)
    except (EvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EVAL_ERROR
    print("f:", " ".join(_fmt(v) for v in result.f))
    print("g:", " ".join(_fmt(v) for v in result.g))
    print("feasible:", "yes" if is_feasible(result) else "no")
    return 0


def cmd_sample(args) -> int:
    spec = info(args.benchmark)
    center = _parse_vector_text(Path(args.center).read_text(encoding="utf-8"))
    if center.shape != (spec.n,):
        print(f"error: center must have {spec.n} entries", file=sys.stderr)
        return USAGE_ERROR
    if args.count < 1:
        print("error: count must be positive", file=sys.stderr)
        return USAGE_ERROR
    try:
        incumbent = float(evaluate(spec.id, center).f[0])
    except (EvaluationError, ValueError) as exc:
        print(f"error: center does not evaluate: {exc}", file=sys.stderr)
        return EVAL_ERROR

    collected = []

    def tee(stream):
        for rec in stream:
            collected.append(rec)
            yield rec

    stream = landscape.local_sample(spec.id, center, args.count, args.seed,
                                    workers=args.threads)
    t0 = time.perf_counter()
    landscape.export_records(tee(stream), args.out, spec.id)
    elapsed = time.perf_counter() - t0
    report = landscape.track_best(collected, incumbent)
    feasible_f = [float(r.f[0]) for r in collected if r.feasible and not r.error]
    best_f = min(feasible_f) if feasible_f else float("nan")
    print(f"samples:     {len(collected)} in {elapsed:.1f} s")
    print(f"center f:    {_fmt(incumbent)}")
    print(f"best found:  {_fmt(best_f)}")
    print(f"improvements: {len(report.improvements)} "
          f"({sum(1 for im in report.improvements if im.significant)} significant at 0.1%)")
    if report.best is not None:
        print(f"best improvement: {report.best.pct_change:.5f}%")
    print(f"wrote {args.out}")
    return 0


def cmd_grid(args) -> int:
    spec = info(args.benchmark)
    base = _parse_vector_text(Path(args.base).read_text(encoding="utf-8"))
    if base.shape != (spec.n,):
        print(f"error: base must have {spec.n} entries", file=sys.stderr)
        return USAGE_ERROR
    i, j = args.i - 1, args.j - 1  # published variable numbering is 1-based
    if i == j:
        print("error: grid axes must differ", file=sys.stderr)
        return USAGE_ERROR
    try:
        grid = landscape.grid_pair(spec.id, base, i, j, workers=args.threads)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    landscape.export_grid(grid, args.out)
    fmin, ci, cj = grid.min_cell()
    print(f"grid: {len(grid.axis_i)} x {len(grid.axis_j)} cells")
    print(f"min feasible f: {_fmt(fmin)} at x{args.i}={_fmt(grid.axis_i[ci])}, "
          f"x{args.j}={_fmt(grid.axis_j[cj])}")
    print(f"wrote {args.out}")
    return 0


def cmd_bench(args) -> int:
    spec = info(args.benchmark)
    if args.count < 1:
        print("error: count must be positive", file=sys.stderr)
        return USAGE_ERROR
    rng = np.random.Generator(np.random.Philox(key=np.array([args.seed, 0], dtype=np.uint64)))
    xs = spec.lb + rng.random((args.count, spec.n)) * (spec.ub - spec.lb)
    evaluate_many(spec.id, xs[: min(64, args.count)], workers=args.threads)  # warm up the JIT
    t0 = time.perf_counter()
    fs, gs, status = evaluate_many(spec.id, xs, workers=args.threads)
    elapsed = time.perf_counter() - t0
    ok = status == 0
    checksum = float(np.sum(fs[ok][:, 0]))
    print(f"evaluations: {args.count} ({int(np.sum(~ok))} failed)")
    print(f"threads:     {args.threads or 'default'}")
    print(f"elapsed:     {elapsed:.3f} s")
    print(f"throughput:  {args.count / elapsed:.0f} eval/s")
    print(f"checksum:    {_fmt(checksum)}")
    return 0


def _add_threads(p):
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker threads (default: GTOPX_THREADS or numba default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtopx",
        description="Interplanetary trajectory optimization benchmark suite",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="list instances or show one instance")
    p.add_argument("benchmark", nargs="?", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("eval", help="evaluate one decision vector")
    p.add_argument("benchmark", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--x", help="inline vector, comma or space separated")
    src.add_argument("--file", help="vector file")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sample", help="local mutation sampling around a center")
    p.add_argument("benchmark", type=int)
    p.add_argument("--center", required=True, help="center vector file")
    p.add_argument("--count", type=int, default=1000000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output CSV")
    _add_threads(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("grid", help="pairwise grid search over two variables")
    p.add_argument("benchmark", type=int)
    p.add_argument("--base", required=True, help="base vector file")
    p.add_argument("-i", type=int, required=True, help="first variable (1-based)")
    p.add_argument("-j", type=int, required=True, help="second variable (1-based)")
    p.add_argument("--out", required=True, help="output CSV")
    _add_threads(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("bench", help="evaluation throughput on random vectors")
    p.add_argument("benchmark", type=int)
    p.add_argument("--count", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    _add_threads(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownBenchmarkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (DimensionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
