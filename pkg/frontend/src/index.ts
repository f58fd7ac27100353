/**
 * TypeScript binding for the gtopx shared library.
 *
 * Mirrors the scripting call shape of the benchmark suite:
 *
 *   const [f, g] = gtopx(benchmark, x, o, n, m);
 *
 * The redundant (o, n, m) dimensions are validated against the library
 * rather than trusted. All values cross the FFI boundary as IEEE-754
 * doubles, so results are bit-identical to native evaluation. The library
 * path comes from GTOPX_LIBRARY or a ../build default.
 */

import { existsSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";
import koffi from "koffi";

export enum AbiStatus {
  Ok = 0,
  UnknownBenchmark = 1,
  DimensionError = 2,
  EvaluationFailure = 3,
  InvalidInteger = 4,
}

export class GtopxError extends Error {
  constructor(message: string, readonly status: AbiStatus) {
    super(message);
    this.name = new.target.name;
  }
}

export class UnknownBenchmarkError extends GtopxError {
  constructor(benchmark: number) {
    super(`unknown benchmark: ${benchmark}`, AbiStatus.UnknownBenchmark);
  }
}

export class DimensionError extends GtopxError {
  constructor(message: string) {
    super(message, AbiStatus.DimensionError);
  }
}

export class EvaluationError extends GtopxError {
  constructor(benchmark: number) {
    super(`benchmark ${benchmark}: evaluation failed`, AbiStatus.EvaluationFailure);
  }
}

export class InvalidIntegerError extends GtopxError {
  constructor(benchmark: number) {
    super(`benchmark ${benchmark}: invalid fly-by planet`, AbiStatus.InvalidInteger);
  }
}

function libraryName(): string {
  if (process.platform === "darwin") return "libgtopx.dylib";
  if (process.platform === "win32") return "gtopx.dll";
  return "libgtopx.so";
}

export function defaultLibraryPath(): string {
  const env = process.env.GTOPX_LIBRARY;
  if (env) return env;
  const here = path.dirname(fileURLToPath(import.meta.url));
  for (const candidate of [
    path.resolve(here, "..", "..", "build", libraryName()),
    path.resolve(process.cwd(), "build", libraryName()),
  ]) {
    if (existsSync(candidate)) return candidate;
  }
  throw new Error(
    `gtopx shared library not found; build it with 'python -m gtopx.abi build' ` +
    `or set GTOPX_LIBRARY`,
  );
}

interface NativeLib {
  gtopx: (benchmark: number, f: Float64Array, g: Float64Array, x: Float64Array) => number;
  gtopxInfo: (benchmark: number, o: Int32Array, n: Int32Array, m: Int32Array,
              nInt: Int32Array) => number;
}

let cached: NativeLib | null = null;
let cachedPath: string | null = null;

function native(): NativeLib {
  const libPath = defaultLibraryPath();
  if (cached && cachedPath === libPath) return cached;
  const lib = koffi.load(libPath);
  cached = {
    gtopx: lib.func("gtopx", "int",
      ["int", "double *", "double *", "const double *"]) as NativeLib["gtopx"],
    gtopxInfo: lib.func("gtopx_info", "int",
      ["int", "int *", "int *", "int *", "int *"]) as NativeLib["gtopxInfo"],
  };
  cachedPath = libPath;
  return cached;
}

/** Dimensions of one benchmark instance. */
export function gtopxInfo(benchmark: number): {
  objectives: number; variables: number; constraints: number; integers: number;
} {
  const o = new Int32Array(1), n = new Int32Array(1);
  const m = new Int32Array(1), nInt = new Int32Array(1);
  const status = native().gtopxInfo(benchmark, o, n, m, nInt);
  if (status !== AbiStatus.Ok) throw new UnknownBenchmarkError(benchmark);
  return { objectives: o[0], variables: n[0], constraints: m[0], integers: nInt[0] };
}

/**
 * Evaluate one decision vector.
 *
 * @param benchmark instance id, 1..10
 * @param x decision vector of length n
 * @param o expected number of objectives (validated)
 * @param n expected number of variables (validated)
 * @param m expected number of constraints (validated)
 * @returns [f, g] objective and constraint arrays (g empty when m = 0;
 *          feasible iff every entry is >= 0)
 */
export function gtopx(
  benchmark: number,
  x: ArrayLike<number>,
  o: number,
  n: number,
  m: number,
): [number[], number[]] {
  const dims = gtopxInfo(benchmark);
  if (o !== dims.objectives || n !== dims.variables || m !== dims.constraints) {
    throw new DimensionError(
      `benchmark ${benchmark} has (o, n, m) = (${dims.objectives}, ` +
      `${dims.variables}, ${dims.constraints}), got (${o}, ${n}, ${m})`,
    );
  }
  if (x.length !== n) {
    throw new DimensionError(`x must have length ${n}, got ${x.length}`);
  }
  const f = new Float64Array(Math.max(o, 1));
  const g = new Float64Array(Math.max(m, 1));
  const status = native().gtopx(benchmark, f, g, Float64Array.from(x));
  switch (status) {
    case AbiStatus.Ok:
      return [Array.from(f.subarray(0, o)), Array.from(g.subarray(0, m))];
    case AbiStatus.UnknownBenchmark:
      throw new UnknownBenchmarkError(benchmark);
    case AbiStatus.DimensionError:
      throw new DimensionError(`benchmark ${benchmark}: dimension mismatch`);
    case AbiStatus.InvalidInteger:
      throw new InvalidIntegerError(benchmark);
    default:
      throw new EvaluationError(benchmark);
  }
}
