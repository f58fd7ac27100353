"""Fitness-landscape analysis: local mutation sampling, pairwise grid
searches, improvement tracking, non-dominated filtering and CSV export.

Sampling reproducibility contract: draws come from the counter-based Philox
generator, keyed per block of ``BLOCK`` samples by (seed, block index), and
every sample consumes a fixed budget of draws.  The stream therefore depends
only on (seed, sample index) and is identical for any worker count or chunk
traversal order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .problems import EvalResult, info, evaluate_many

__all__ = [
    "BLOCK",
    "GridSlice",
    "Improvement",
    "ImprovementReport",
    "SampleRecord",
    "export_grid",
    "export_records",
    "grid_pair",
    "import_records",
    "local_sample",
    "pareto_filter",
    "track_best",
]

BLOCK = 65536            # samples per random substream
GRID_POINTS = 1001       # inclusive per-axis grid resolution (mesh 0.001)
SIGNIFICANT_PCT = 0.1    # traditional improvement-significance threshold, %


@dataclass(frozen=True)
class SampleRecord:
    """One evaluated neighbourhood sample."""

    x: np.ndarray
    f: np.ndarray
    g: np.ndarray
    feasible: bool
    mutated_mask: np.ndarray
    error: bool = False


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.array([seed, block], dtype=np.uint64)))


def local_sample(benchmark: int, center, count: int, seed: int,
                 workers: int | None = None) -> Iterator[SampleRecord]:
    """Gaussian 1/N-mutation sampling around a center vector.

    Each of the ``count`` samples mutates every variable independently with
    probability 1/N; a mutated variable is redrawn from a normal distribution
    centered on the center value with sigma = (ub - lb)/3 and clipped to its
    box.  Samples are evaluated through the benchmark; evaluation failures
    yield records flagged ``error`` instead of aborting the stream.
    """
    spec = info(benchmark)
    center = np.asarray(center, dtype=float)
    if center.shape != (spec.n,):
        raise ValueError(f"center must have length {spec.n}")
    if count < 1:
        raise ValueError("count must be >= 1")
    if seed is None:
        raise ValueError("a seed is required for reproducibility")

    sigma = (spec.ub - spec.lb) / 3.0
    p_mut = 1.0 / spec.n

    produced = 0
    block = 0
    while produced < count:
        take = min(BLOCK, count - produced)
        rng = _block_rng(seed, block)
        mask = rng.random((BLOCK, spec.n)) < p_mut
        draws = rng.standard_normal((BLOCK, spec.n))
        mask = mask[:take]
        draws = draws[:take]
        xs = np.where(mask,
                      np.clip(center + sigma * draws, spec.lb, spec.ub),
                      center)
        fs, gs, status = evaluate_many(benchmark, xs, workers=workers)
        for i in range(take):
            bad = status[i] != 0
            yield SampleRecord(
                x=xs[i], f=fs[i], g=gs[i],
                feasible=bool(not bad and np.all(gs[i] >= 0.0)),
                mutated_mask=mask[i], error=bool(bad),
            )
        produced += take
        block += 1


@dataclass(frozen=True)
class GridSlice:
    """Objective values over an inclusive 2-D grid of one variable pair."""

    benchmark: int
    var_i: int                  # 0-based variable index of the first axis
    var_j: int
    axis_i: np.ndarray          # grid coordinates, axis_i[0] = lb, [-1] = ub
    axis_j: np.ndarray
    f_grid: np.ndarray          # first objective; NaN where evaluation failed
    feasible_grid: np.ndarray   # False for infeasible or failed cells

    def min_cell(self) -> tuple[float, int, int]:
        """(f, i, j) of the best feasible cell."""
        masked = np.where(self.feasible_grid, self.f_grid, np.inf)
        flat = int(np.nanargmin(masked))
        i, j = np.unravel_index(flat, masked.shape)
        return float(masked[i, j]), int(i), int(j)


def grid_pair(benchmark: int, base, var_i: int, var_j: int,
              workers: int | None = None) -> GridSlice:
    """Exhaustive 1001 x 1001 grid over two continuous variables.

    All other variables stay fixed at ``base``.  The mesh is 0.001 of the
    variable range with both bounds included exactly.
    """
    spec = info(benchmark)
    base = np.asarray(base, dtype=float)
    if base.shape != (spec.n,):
        raise ValueError(f"base must have length {spec.n}")
    if var_i == var_j:
        raise ValueError("grid axes must differ")
    for v in (var_i, var_j):
        if not 0 <= v < spec.n:
            raise ValueError(f"variable index {v} out of range")
        if v >= spec.n_cont:
            raise ValueError("grid over integer variable unsupported")

    axis_i = np.linspace(spec.lb[var_i], spec.ub[var_i], GRID_POINTS)
    axis_j = np.linspace(spec.lb[var_j], spec.ub[var_j], GRID_POINTS)

    f_grid = np.empty((GRID_POINTS, GRID_POINTS))
    feas = np.empty((GRID_POINTS, GRID_POINTS), dtype=bool)
    xs = np.tile(base, (GRID_POINTS, 1))
    for row, vi in enumerate(axis_i):
        xs[:, var_i] = vi
        xs[:, var_j] = axis_j
        fs, gs, status = evaluate_many(benchmark, xs, workers=workers)
        ok = status == 0
        f_grid[row] = np.where(ok, fs[:, 0], np.nan)
        feas[row] = ok & np.all(gs >= 0.0, axis=1)
    return GridSlice(spec.id, var_i, var_j, axis_i, axis_j, f_grid, feas)


@dataclass(frozen=True)
class Improvement:
    x: np.ndarray
    f: float
    pct_change: float
    significant: bool


@dataclass(frozen=True)
class ImprovementReport:
    incumbent_f: float
    improvements: tuple[Improvement, ...]

    @property
    def best(self) -> Improvement | None:
        return min(self.improvements, key=lambda im: im.f, default=None)


def track_best(records: Iterable[SampleRecord], incumbent_f: float) -> ImprovementReport:
    """Collect feasible samples improving on an incumbent objective value.

    Each improvement carries its percentage change relative to the incumbent
    and a flag for the traditional 0.1% significance threshold.
    """
    found = []
    for rec in records:
        if rec.error or not rec.feasible:
            continue
        f = float(rec.f[0])
        if f < incumbent_f:
            pct = 100.0 * (incumbent_f - f) / abs(incumbent_f)
            found.append(Improvement(rec.x, f, pct, pct >= SIGNIFICANT_PCT))
    return ImprovementReport(incumbent_f, tuple(found))


def pareto_filter(points: Sequence) -> list:
    """Non-dominated subset under minimization, preserving input order.

    A point is dropped iff some other point is no worse in every objective
    and strictly better in at least one.
    """
    arr = np.asarray([np.asarray(p, dtype=float) for p in points])
    if arr.ndim != 2:
        raise ValueError("objective vectors must share one length")
    n = arr.shape[0]
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        if not keep[i]:
            continue
        le = np.all(arr <= arr[i], axis=1)
        lt = np.any(arr < arr[i], axis=1)
        if np.any(le & lt):
            keep[i] = False
    return [points[i] for i in range(n) if keep[i]]


def _fmt(v: float) -> str:
    return format(v, ".17g")


def export_records(records: Iterable[SampleRecord], destination, benchmark: int) -> Path:
    """Write samples as CSV; values round-trip exactly at 17 digits."""
    spec = info(benchmark)
    path = Path(destination)
    cols = ([f"x{i+1}" for i in range(spec.n)]
            + [f"f{i+1}" for i in range(spec.n_obj)]
            + [f"g{i+1}" for i in range(spec.m)]
            + ["feasible"])
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            fh.write(f"# benchmark={spec.id}\n")
            fh.write(",".join(cols) + "\n")
            for rec in records:
                row = [_fmt(v) for v in rec.x]
                row += [_fmt(v) for v in rec.f]
                row += [_fmt(v) for v in rec.g]
                row.append("1" if rec.feasible else "0")
                fh.write(",".join(row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path


def import_records(source) -> tuple[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Read back an exported sample CSV.

    Returns (benchmark, x, f, g, feasible) arrays.
    """
    path = Path(source)
    with path.open("r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        benchmark = int(header.split("=", 1)[1])
        spec = info(benchmark)
        fh.readline()  # column names
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    n, o, m = spec.n, spec.n_obj, spec.m
    return (benchmark, data[:, :n], data[:, n:n + o],
            data[:, n + o:n + o + m], data[:, -1] > 0.5)


def export_grid(grid: GridSlice, destination) -> Path:
    """Write a grid slice in long format: one row per cell."""
    path = Path(destination)
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            fh.write(f"# benchmark={grid.benchmark} var_i={grid.var_i} var_j={grid.var_j}\n")
            fh.write("xi,xj,f,feasible\n")
            for i, vi in enumerate(grid.axis_i):
                for j, vj in enumerate(grid.axis_j):
                    fh.write(f"{_fmt(vi)},{_fmt(vj)},{_fmt(grid.f_grid[i, j])},"
                             f"{1 if grid.feasible_grid[i, j] else 0}\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path
