import { readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import {
  AbiStatus,
  DimensionError,
  EvaluationError,
  InvalidIntegerError,
  UnknownBenchmarkError,
  gtopx,
  gtopxInfo,
} from "../src/index.js";

const here = path.dirname(fileURLToPath(import.meta.url));
const fixtures = JSON.parse(
  readFileSync(path.join(here, "fixtures", "expected.json"), "utf-8"),
) as {
  dims: Record<string, { o: number; n: number; m: number; n_int: number }>;
  cases: { benchmark: number; x: number[]; f: number[]; g: number[] }[];
};

describe("gtopxInfo", () => {
  it("reports the documented dimensions for all ten instances", () => {
    for (const [pid, d] of Object.entries(fixtures.dims)) {
      const info = gtopxInfo(Number(pid));
      expect(info.objectives).toBe(d.o);
      expect(info.variables).toBe(d.n);
      expect(info.constraints).toBe(d.m);
      expect(info.integers).toBe(d.n_int);
    }
  });

  it("rejects unknown benchmark ids", () => {
    expect(() => gtopxInfo(0)).toThrow(UnknownBenchmarkError);
    expect(() => gtopxInfo(11)).toThrow(UnknownBenchmarkError);
  });
});

describe("gtopx", () => {
  it("is bit-identical to native evaluation on 50 vectors per instance", () => {
    expect(fixtures.cases.length).toBe(500);
    for (const c of fixtures.cases) {
      const d = fixtures.dims[String(c.benchmark)];
      const [f, g] = gtopx(c.benchmark, c.x, d.o, d.n, d.m);
      // fixtures carry 17-significant-digit values: exact double round-trip
      expect(f).toStrictEqual(c.f);
      expect(g).toStrictEqual(c.g);
    }
  });

  it("validates the redundant dimension arguments", () => {
    const c = fixtures.cases[0];
    const d = fixtures.dims[String(c.benchmark)];
    expect(() => gtopx(c.benchmark, c.x, d.o, d.n - 1, d.m)).toThrow(DimensionError);
    expect(() => gtopx(c.benchmark, c.x.slice(1), d.o, d.n, d.m)).toThrow(DimensionError);
  });

  it("raises on unknown benchmarks", () => {
    expect(() => gtopx(99, [0, 0, 0], 1, 3, 0)).toThrow(UnknownBenchmarkError);
  });

  it("raises on invalid fly-by planet choices", () => {
    const d = fixtures.dims["8"];
    const base = fixtures.cases.find((c) => c.benchmark === 8)!;
    const x = [...base.x];
    x[6] = 9.7; // rounds outside 1..9
    expect(() => gtopx(8, x, d.o, d.n, d.m)).toThrow(InvalidIntegerError);
  });

  it("raises on evaluation failures", () => {
    // a pathological vector: zero times of flight break the trajectory model
    const d = fixtures.dims["2"];
    const x = new Array<number>(d.n).fill(0);
    expect(() => gtopx(2, x, d.o, d.n, d.m)).toThrow(EvaluationError);
  });

  it("exposes the stable status codes", () => {
    expect(AbiStatus.Ok).toBe(0);
    expect(AbiStatus.UnknownBenchmark).toBe(1);
    expect(AbiStatus.DimensionError).toBe(2);
    expect(AbiStatus.EvaluationFailure).toBe(3);
    expect(AbiStatus.InvalidInteger).toBe(4);
  });
});
