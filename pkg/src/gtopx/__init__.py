"""Thread-safe interplanetary trajectory optimization benchmarks.

Ten real-world mission-design instances (powered multi-gravity-assist and
deep-space-maneuver models, mixed-integer and multi-objective variants)
behind one evaluation call, plus landscape-analysis tools and a C shared
library interface.

>>> import gtopx
>>> spec = gtopx.info(1)
>>> result = gtopx.evaluate(1, spec.lb)  # doctest: +SKIP
"""

from . import astro, landscape, solutions
from .problems import (
    DimensionError,
    EvalResult,
    EvaluationError,
    ProblemSpec,
    UnknownBenchmarkError,
    evaluate,
    evaluate_many,
    info,
    instance_ids,
    is_feasible,
)

__version__ = "1.0.0"

__all__ = [
    "DimensionError",
    "EvalResult",
    "EvaluationError",
    "ProblemSpec",
    "UnknownBenchmarkError",
    "astro",
    "evaluate",
    "evaluate_many",
    "info",
    "instance_ids",
    "is_feasible",
    "landscape",
    "solutions",
    "__version__",
]
