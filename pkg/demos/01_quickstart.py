"""First contact with the benchmark suite.

Lists the ten instances, evaluates the bundled best-known solution of each
single-objective instance and compares against the published objective
values stored in the registry.
"""

import numpy as np

import gtopx
from gtopx import solutions

print(f"{'id':>3} {'name':24} {'n':>3} {'m':>2} {'published':>12} {'reproduced':>14}")
fixture_names = {
    1: "cassini1_best",
    2: "cassini2_best",
    3: "messenger_reduced_best",
    4: "messenger_full_best",
    5: "gtoc1_best",
    6: "rosetta_prev_best",
    7: "sagas_best",
    8: "cassini1_minlp_best",
}

for pid in gtopx.instance_ids():
    spec = gtopx.info(pid)
    shipped = solutions.available().get(fixture_names.get(pid, ""), None)
    if fixture_names.get(pid) in solutions.available():
        x = solutions.load(fixture_names[pid])
        result = gtopx.evaluate(pid, x)
        reproduced = f"{result.f[0]:.6g}"
        tag = "feasible" if gtopx.is_feasible(result) else "INFEASIBLE"
    else:
        reproduced, tag = "-", ""
    published = "na" if spec.best_known_f is None else f"{spec.best_known_f:g}"
    print(f"{spec.id:>3} {spec.name:24} {spec.n:>3} {spec.m:>2} {published:>12} "
          f"{reproduced:>14} {tag}")

# a single evaluation is just a function call on a plain vector
x = solutions.load("rosetta_prev_best")
result = gtopx.evaluate(6, x)
print("\nRosetta at the previously best known vector:")
print("  f =", result.f[0], " (published 1.34335206)")
