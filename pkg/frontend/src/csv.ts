import Papa from "papaparse";

/** Column layout produced by the multishep CLI. */
export const REPORT_COLUMNS = [
  "example_id",
  "node_family",
  "d",
  "n",
  "q",
  "mu",
  "alpha",
  "omega",
  "xi",
  "pointwise_error",
  "mean_error",
  "cond",
  "residual",
  "runtime_ms",
] as const;

export type ReportColumn = (typeof REPORT_COLUMNS)[number];

/** One CSV row; empty fields stay as empty strings. */
export type ReportRow = Record<ReportColumn, string>;

export class SchemaError extends Error {}

/**
 * Parse a multishep report CSV. Throws SchemaError naming the first
 * missing column when the header does not match.
 */
export function parseReportCsv(text: string): ReportRow[] {
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const rows = parsed.data;
  if (rows.length === 0) {
    throw new SchemaError("CSV has no header row");
  }
  const header = rows[0];
  for (const column of REPORT_COLUMNS) {
    if (!header.includes(column)) {
      throw new SchemaError(`missing column: ${column}`);
    }
  }
  const index = new Map(header.map((name, i) => [name, i]));
  return rows.slice(1).map((fields) => {
    const row = {} as ReportRow;
    for (const column of REPORT_COLUMNS) {
      row[column] = fields[index.get(column)!] ?? "";
    }
    return row;
  });
}

/** Rows carrying per-grid-point errors (xi and pointwise_error set). */
export function pointwiseRows(rows: ReportRow[]): ReportRow[] {
  return rows.filter((r) => r.xi !== "" && r.pointwise_error !== "");
}

/** Per-report summary rows (mean_error set, xi empty). */
export function summaryRows(rows: ReportRow[]): ReportRow[] {
  return rows.filter((r) => r.xi === "" && r.mean_error !== "");
}
