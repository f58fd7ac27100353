"""C-compatible shared-library interface.

``build()`` compiles a standalone shared library (libgtopx.so / .dylib /
gtopx.dll) that embeds a Python interpreter and exposes two unmangled C
entry points, declared in ``include/gtopx.h``:

    int gtopx(int benchmark, double *f, double *g, const double *x);
    int gtopx_info(int benchmark, int *o, int *n, int *m, int *n_int);

The caller allocates ``f`` and ``g`` with the dimensions reported by
``gtopx_info`` and passes ``x`` of length n; all reals are IEEE-754 doubles.
Results are bit-identical to in-process evaluation and both calls are
reentrant.  ``load()`` opens a built library through ctypes, mainly for the
test suite and for binding smoke checks.
"""

from __future__ import annotations

import ctypes
import enum
import os
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path

__all__ = ["AbiStatus", "build", "default_library_name", "header_path", "load"]


class AbiStatus(enum.IntEnum):
    """Stable status codes of the C interface."""

    OK = 0
    UNKNOWN_BENCHMARK = 1
    DIMENSION_ERROR = 2
    EVALUATION_FAILURE = 3
    INVALID_INTEGER = 4


_CDEF = """
int gtopx(int benchmark, double *f, double *g, const double *x);
int gtopx_info(int benchmark, int *o, int *n, int *m, int *n_int);
"""

_INIT_CODE = r"""
from gtopx_cabi import ffi
import numpy as np

import gtopx.problems as problems

@ffi.def_extern()
def gtopx(benchmark, f, g, x):
    try:
        spec = problems.PROBLEMS[int(benchmark)]
    except (KeyError, ValueError):
        return 1
    try:
        xv = np.frombuffer(ffi.buffer(x, spec.n * 8), dtype=np.float64)
        result = problems.evaluate(spec.id, xv.copy())
    except problems.DimensionError:
        return 2
    except ValueError:
        return 4
    except Exception:
        return 3
    for i in range(spec.n_obj):
        f[i] = result.f[i]
    for i in range(spec.m):
        g[i] = result.g[i]
    return 0

@ffi.def_extern()
def gtopx_info(benchmark, o, n, m, n_int):
    try:
        spec = problems.PROBLEMS[int(benchmark)]
    except (KeyError, ValueError):
        return 1
    o[0] = spec.n_obj
    n[0] = spec.n
    m[0] = spec.m
    n_int[0] = spec.n_int
    return 0
"""


def header_path() -> Path:
    """Location of the distributed C header."""
    return Path(__file__).parent / "include" / "gtopx.h"


def default_library_name() -> str:
    if sys.platform == "darwin":
        return "libgtopx.dylib"
    if os.name == "nt":
        return "gtopx.dll"
    return "libgtopx.so"


def build(output_dir=None, verbose: bool = False) -> Path:
    """Compile the shared library for the current platform.

    Returns the path of the produced library.  The library embeds the
    running interpreter's runtime, so the gtopx package must stay importable
    (same environment) when external programs load it.
    """
    import cffi

    out_dir = Path(output_dir) if output_dir is not None else Path.cwd() / "build"
    out_dir.mkdir(parents=True, exist_ok=True)

    ffibuilder = cffi.FFI()
    ffibuilder.embedding_api(_CDEF)
    ffibuilder.set_source("gtopx_cabi", "")
    ffibuilder.embedding_init_code(_INIT_CODE)

    target = default_library_name().replace("gtopx", "gtopx*", 1).replace("*.", ".")
    # cffi expects a wildcard target like 'libgtopx.*'
    target = default_library_name().rsplit(".", 1)[0] + ".*"
    with tempfile.TemporaryDirectory() as tmp:
        produced = ffibuilder.compile(tmpdir=tmp, target=target, verbose=verbose)
        dest = out_dir / Path(produced).name
        shutil.copy2(produced, dest)
    shutil.copy2(header_path(), out_dir / "gtopx.h")
    return dest


def _library_search_paths() -> list[Path]:
    paths = []
    env = os.environ.get("GTOPX_LIBRARY")
    if env:
        paths.append(Path(env))
    paths.append(Path.cwd() / "build" / default_library_name())
    paths.append(Path(__file__).parent / default_library_name())
    return paths


class _Library:
    """ctypes view of a built shared library."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lib = ctypes.CDLL(str(self.path))
        self._lib.gtopx.restype = ctypes.c_int
        self._lib.gtopx.argtypes = [ctypes.c_int, ctypes.POINTER(ctypes.c_double),
                                    ctypes.POINTER(ctypes.c_double),
                                    ctypes.POINTER(ctypes.c_double)]
        self._lib.gtopx_info.restype = ctypes.c_int
        self._lib.gtopx_info.argtypes = [ctypes.c_int] + [ctypes.POINTER(ctypes.c_int)] * 4

    def info(self, benchmark: int):
        o = ctypes.c_int(); n = ctypes.c_int(); m = ctypes.c_int(); ni = ctypes.c_int()
        status = self._lib.gtopx_info(benchmark, ctypes.byref(o), ctypes.byref(n),
                                      ctypes.byref(m), ctypes.byref(ni))
        return AbiStatus(status), (o.value, n.value, m.value, ni.value)

    def evaluate(self, benchmark: int, x):
        import numpy as np

        status, (o, n, m, _) = self.info(benchmark)
        if status != AbiStatus.OK:
            return status, None, None
        xa = np.ascontiguousarray(x, dtype=np.float64)
        f = np.zeros(max(o, 1))
        g = np.zeros(max(m, 1))
        st = self._lib.gtopx(
            benchmark,
            f.ctypes.data_as(ctypes.POINTER(ctypes.c_double)),
            g.ctypes.data_as(ctypes.POINTER(ctypes.c_double)),
            xa.ctypes.data_as(ctypes.POINTER(ctypes.c_double)),
        )
        return AbiStatus(st), f[:o], g[:m]


def load(path=None) -> _Library:
    """Open a built shared library (GTOPX_LIBRARY overrides the default path)."""
    if path is not None:
        return _Library(Path(path))
    for cand in _library_search_paths():
        if cand.is_file():
            return _Library(cand)
    raise FileNotFoundError(
        "no gtopx shared library found; build one with "
        "'python -m gtopx.abi build' or set GTOPX_LIBRARY"
    )


def main(argv=None) -> int:
    import argparse

    parser = argparse.ArgumentParser(prog="python -m gtopx.abi",
                                     description="build the C shared library")
    sub = parser.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="compile the shared library")
    b.add_argument("--out", default="build", help="output directory (default: ./build)")
    b.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)
    if args.command == "build":
        path = build(args.out, verbose=args.verbose)
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
