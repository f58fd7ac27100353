"""Produce binding test fixtures through the shared library.

Expected values are obtained by calling the C interface (never the Python
internals), serialized at 17 significant digits so they round-trip to the
exact doubles the binding must reproduce.
"""

import json
import sys

import numpy as np

from gtopx import abi


def g17(v: float) -> float:
    return float(format(v, ".17g"))


def main(lib_path: str, out_path: str) -> None:
    from gtopx import problems  # box bounds for sampling only; values come from the ABI

    lib = abi.load(lib_path)
    rng = np.random.default_rng(424242)
    cases = []
    dims = {}
    for pid in range(1, 11):
        status, (o, n, m, n_int) = lib.info(pid)
        assert status == abi.AbiStatus.OK
        dims[pid] = dict(o=o, n=n, m=m, n_int=n_int)
        spec = problems.info(pid)
        produced = 0
        while produced < 50:
            x = rng.uniform(spec.lb, spec.ub)
            st, f, g = lib.evaluate(pid, x)
            if st != abi.AbiStatus.OK:
                continue
            cases.append({
                "benchmark": pid,
                "x": [g17(v) for v in x],
                "f": [g17(v) for v in f],
                "g": [g17(v) for v in g],
            })
            produced += 1
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump({"dims": dims, "cases": cases}, fh)
    print(f"wrote {out_path} ({len(cases)} cases)")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
