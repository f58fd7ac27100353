"""The ten benchmark instances behind one uniform evaluation contract.

``evaluate(benchmark, x)`` takes a raw decision vector and returns objective
and constraint arrays; constraints follow the g >= 0 feasibility convention.
The registry is immutable after import and every evaluation is a pure
function, so unrestricted concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import get_num_threads, set_num_threads

from . import _evaluators as _ev
from . import _kernels as _k
from ._tables import (
    AU_KM,
    BODY_MU,
    BODY_RADIUS,
    BODY_RPMIN,
    BOUNDS,
    EPH_COEF,
    MU_SUN,
    TARGET_ELEMS,
)

__all__ = [
    "DimensionError",
    "EvalResult",
    "EvaluationError",
    "ProblemSpec",
    "UnknownBenchmarkError",
    "evaluate",
    "evaluate_many",
    "info",
    "instance_ids",
    "is_feasible",
]


class UnknownBenchmarkError(KeyError):
    """Raised for benchmark ids outside 1..10."""


class DimensionError(ValueError):
    """Raised when a decision vector has the wrong length."""


class EvaluationError(RuntimeError):
    """Raised when the trajectory model cannot evaluate a vector."""

    def __init__(self, benchmark: int, code: int, leg: int):
        super().__init__(
            f"benchmark {benchmark}: evaluation failed with code {code} at leg {leg}"
        )
        self.benchmark = benchmark
        self.code = code
        self.leg = leg


@dataclass(frozen=True)
class ProblemSpec:
    """Static description of one benchmark instance."""

    id: int
    name: str
    n_obj: int
    n_cont: int
    n_int: int
    m: int
    lb: np.ndarray
    ub: np.ndarray
    sequence: tuple[int, ...]
    best_known_f: float | None

    @property
    def n(self) -> int:
        return self.n_cont + self.n_int


def _spec(pid, name, n_obj, n_int, m, sequence, best):
    lb, ub = BOUNDS[pid]
    return ProblemSpec(pid, name, n_obj, len(lb) - n_int, n_int, m,
                       lb, ub, sequence, best)


_SATURN_SEQ = (3, 2, 2, 3, 5, 6)

PROBLEMS: dict[int, ProblemSpec] = {
    1: _spec(1, "Cassini1", 1, 0, 4, _SATURN_SEQ, 4.9307),
    2: _spec(2, "Cassini2", 1, 0, 0, _SATURN_SEQ, 8.3830),
    3: _spec(3, "Messenger (reduced)", 1, 0, 0, (3, 3, 2, 2, 1), 8.6299),
    4: _spec(4, "Messenger (full)", 1, 0, 0, (3, 2, 2, 1, 1, 1, 1), 1.9579),
    5: _spec(5, "GTOC1", 1, 0, 6, (3, 2, 3, 2, 3, 5, 6, 10), -1581950.0),
    6: _spec(6, "Rosetta", 1, 0, 0, (3, 3, 4, 3, 3, 11), 1.3434),
    7: _spec(7, "Sagas", 1, 0, 2, (3, 3, 5), 18.1877),
    8: _spec(8, "Cassini1-MINLP", 1, 4, 4, _SATURN_SEQ, 3.5007),
    9: _spec(9, "Cassini1-MO", 2, 0, 5, _SATURN_SEQ, None),
    10: _spec(10, "Cassini1-MO-MINLP", 2, 4, 5, _SATURN_SEQ, None),
}


def instance_ids() -> tuple[int, ...]:
    return tuple(sorted(PROBLEMS))


def info(benchmark: int) -> ProblemSpec:
    """Immutable spec of one benchmark instance (1..10)."""
    try:
        return PROBLEMS[int(benchmark)]
    except (KeyError, ValueError):
        raise UnknownBenchmarkError(f"unknown benchmark: {benchmark!r}") from None


@dataclass(frozen=True)
class EvalResult:
    """Objectives and constraints of one evaluation (feasible iff g >= 0)."""

    f: np.ndarray
    g: np.ndarray


def is_feasible(result: EvalResult) -> bool:
    """True iff every constraint entry is non-negative (empty g is feasible)."""
    return bool(np.all(result.g >= 0.0))


def _check_vector(spec: ProblemSpec, x) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=float)
    if x.shape != (spec.n,):
        raise DimensionError(
            f"dimension mismatch: benchmark {spec.id} expects {spec.n} variables, "
            f"got {x.shape}"
        )
    return x


def _raise_status(benchmark: int, status: int):
    code = status % 100
    if code == _k.ERR_SEQUENCE:
        raise ValueError(f"benchmark {benchmark}: invalid fly-by planet")
    raise EvaluationError(benchmark, code, status // 100)


def evaluate(benchmark: int, x) -> EvalResult:
    """Evaluate one decision vector of length info(benchmark).n.

    Out-of-bounds continuous values are evaluated as-is (black-box contract);
    integer slots must round into the valid planet range.
    """
    spec = info(benchmark)
    x = _check_vector(spec, x)
    f = np.zeros(spec.n_obj)
    g = np.zeros(spec.m)
    status = _ev.eval_instance(
        spec.id, x, EPH_COEF, TARGET_ELEMS, MU_SUN, AU_KM,
        BODY_MU, BODY_RADIUS, BODY_RPMIN, f, g,
    )
    if status != _k.OK:
        _raise_status(spec.id, status)
    return EvalResult(f, g)


def evaluate_many(benchmark: int, xs, workers: int | None = None):
    """Evaluate a batch of row vectors.

    Returns (f, g, status) arrays; rows with a non-zero status carry
    unspecified f/g content (callers flag them instead of aborting).  The
    result is bit-identical for any worker count.
    """
    spec = info(benchmark)
    xs = np.ascontiguousarray(xs, dtype=float)
    if xs.ndim != 2 or xs.shape[1] != spec.n:
        raise DimensionError(
            f"dimension mismatch: benchmark {spec.id} expects row length {spec.n}"
        )
    fs = np.zeros((xs.shape[0], spec.n_obj))
    gs = np.zeros((xs.shape[0], spec.m))
    status = np.zeros(xs.shape[0], dtype=np.int64)
    args = (spec.id, xs, EPH_COEF, TARGET_ELEMS, MU_SUN, AU_KM,
            BODY_MU, BODY_RADIUS, BODY_RPMIN, fs, gs, status)
    if workers is not None and workers == 1:
        _ev.eval_serial(*args)
        return fs, gs, status
    if workers is None:
        _ev.eval_batch(*args)
        return fs, gs, status
    from numba import config as _numba_config

    previous = get_num_threads()
    try:
        set_num_threads(min(max(1, int(workers)), _numba_config.NUMBA_NUM_THREADS))
        _ev.eval_batch(*args)
    finally:
        set_num_threads(previous)
    return fs, gs, status
