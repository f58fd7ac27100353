"""Neighbourhood sampling around a best-known solution.

Draws 100k mutation samples around the Rosetta incumbent (each variable
mutates with probability 1/N from a normal with sigma = range/3), tracks
improvements against the incumbent and writes the records to CSV for
parallel-coordinate plotting.
"""

import numpy as np

from gtopx import landscape, problems, solutions

CENTER = solutions.load("rosetta_prev_best")
INCUMBENT = problems.evaluate(6, CENTER).f[0]
COUNT = 100_000

records = []
for rec in landscape.local_sample(6, CENTER, COUNT, seed=7):
    records.append(rec)

feasible_f = np.array([r.f[0] for r in records if r.feasible and not r.error])
report = landscape.track_best(records, INCUMBENT)

print(f"samples:        {COUNT}")
print(f"incumbent f:    {INCUMBENT:.8f}")
print(f"best sampled f: {feasible_f.min():.8f}")
print(f"median f:       {np.median(feasible_f):.3f}")
print(f"improvements:   {len(report.improvements)}")
for im in sorted(report.improvements, key=lambda im: im.f)[:5]:
    flag = "significant" if im.significant else "below the 0.1% threshold"
    print(f"  f = {im.f:.8f}  ({im.pct_change:.5f}% better, {flag})")

path = landscape.export_records(records, "rosetta_samples.csv", 6)
print("wrote", path)
