import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { describe, expect, it } from "vitest";

import { checkSidecar, column, hasColumn, parseCsv } from "../src/csv.js";

describe("parseCsv", () => {
  it("splits header and rows", () => {
    const table = parseCsv("a,b\n1,2\n3,4\n");
    expect(table.header).toEqual(["a", "b"]);
    expect(table.rows).toEqual([
      ["1", "2"],
      ["3", "4"],
    ]);
  });

  it("accepts header-only files", () => {
    const table = parseCsv("k,a,N_k,C_k\n");
    expect(table.rows).toHaveLength(0);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv("a,b\n1\n", "bad.csv")).toThrow(/ragged row in bad.csv/);
  });

  it("rejects empty input", () => {
    expect(() => parseCsv("", "empty.csv")).toThrow(/empty CSV/);
  });
});

describe("column", () => {
  it("parses numbers including nan", () => {
    const table = parseCsv("x,y\n1,nan\n2.5,3\n");
    expect(column(table, "x")).toEqual([1, 2.5]);
    const y = column(table, "y");
    expect(Number.isNaN(y[0])).toBe(true);
  });

  it("names the missing column and file", () => {
    const table = parseCsv("x,y\n1,2\n", "data.csv");
    expect(() => column(table, "C_k")).toThrow('missing column "C_k" in data.csv');
    expect(hasColumn(table, "C_k")).toBe(false);
  });
});

describe("checkSidecar", () => {
  it("tolerates a missing sidecar and rejects bad versions", () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), "sidecar-"));
    const csvPath = path.join(dir, "data.csv");
    fs.writeFileSync(csvPath, "a\n1\n");
    expect(checkSidecar(csvPath)).toBeNull();
    fs.writeFileSync(
      path.join(dir, "data.json"),
      JSON.stringify({ schema_version: 1, params: { n: 5 } }),
    );
    expect(checkSidecar(csvPath)?.params).toEqual({ n: 5 });
    fs.writeFileSync(path.join(dir, "data.json"), JSON.stringify({ schema_version: 99 }));
    expect(() => checkSidecar(csvPath)).toThrow(/unsupported schema_version 99/);
  });
});
