"""Calling the benchmarks through the C shared library.

Builds libgtopx (once) and evaluates through the C entry points exactly the
way an external optimizer written in C, Fortran or another language would:
  gtopx_info(benchmark, &o, &n, &m, &n_int)
  gtopx(benchmark, f, g, x)
Results are bit-identical to in-process evaluation.
"""

from pathlib import Path

from gtopx import abi, problems, solutions

lib_path = Path("build") / abi.default_library_name()
if not lib_path.is_file():
    print("building", lib_path, "...")
    lib_path = abi.build("build")
lib = abi.load(lib_path)

status, (o, n, m, n_int) = lib.info(1)
print(f"instance 1 dimensions from C: o={o} n={n} m={m} n_int={n_int}")

x = solutions.load("cassini1_best")
status, f, g = lib.evaluate(1, x)
print("status:", status.name)
print("f:", f[0], " (published 4.9307)")
print("g:", g)

native = problems.evaluate(1, x)
print("bit-identical to the Python call:", f[0] == native.f[0])

print("\nstatus codes:", {s.name: int(s) for s in abi.AbiStatus})
print("header:", abi.header_path())
