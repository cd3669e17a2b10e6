import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import {
  parseReportCsv,
  pointwiseRows,
  REPORT_COLUMNS,
  SchemaError,
  summaryRows,
} from "../src/csv.js";

const FIXTURES = join(__dirname, "fixtures");
const HEADER = REPORT_COLUMNS.join(",");

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf8");
}

describe("parseReportCsv", () => {
  it("parses the derivative sweep fixture", () => {
    const rows = parseReportCsv(fixture("deriv-sin-alpha.csv"));
    // six reports of 100 pointwise rows plus a summary row each
    expect(rows).toHaveLength(6 * 101);
    expect(rows[0].example_id).toBe("deriv-sin");
    expect(pointwiseRows(rows)).toHaveLength(600);
    expect(summaryRows(rows)).toHaveLength(6);
  });

  it("keeps summary and pointwise rows disjoint", () => {
    const rows = parseReportCsv(fixture("bvp5-d-sweep.csv"));
    const summaries = summaryRows(rows);
    expect(summaries).toHaveLength(12);
    for (const row of summaries) {
      expect(row.xi).toBe("");
      expect(Number(row.mean_error)).toBeGreaterThan(0);
    }
  });

  it("names the missing column in schema errors", () => {
    const broken = HEADER.replace("mean_error,", "") + "\n";
    expect(() => parseReportCsv(broken)).toThrowError(SchemaError);
    expect(() => parseReportCsv(broken)).toThrowError(/missing column: mean_error/);
  });

  it("rejects empty input", () => {
    expect(() => parseReportCsv("")).toThrowError(SchemaError);
  });

  it("accepts a header-only CSV as zero rows", () => {
    expect(parseReportCsv(HEADER + "\n")).toHaveLength(0);
  });
});
