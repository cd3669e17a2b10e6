import {
  pointwiseRows,
  ReportColumn,
  ReportRow,
  SchemaError,
  summaryRows,
} from "./csv.js";

export type FigureKind = "pointwise" | "mean-vs-d" | "cond-vs-d";

export interface FigureSpec {
  kind: FigureKind;
  /** Column whose distinct values become separate curves. */
  series?: ReportColumn;
}

export interface Curve {
  label: string;
  /** Points in x order; nonpositive y values are dropped (log axis). */
  points: Array<{ x: number; y: number }>;
}

export interface FigureData {
  xLabel: string;
  yLabel: string;
  curves: Curve[];
}

const KIND_LAYOUT: Record<
  FigureKind,
  { x: ReportColumn; y: ReportColumn; defaultSeries: ReportColumn; xLabel: string; yLabel: string }
> = {
  pointwise: {
    x: "xi",
    y: "pointwise_error",
    defaultSeries: "alpha",
    xLabel: "x",
    yLabel: "pointwise absolute error",
  },
  "mean-vs-d": {
    x: "d",
    y: "mean_error",
    defaultSeries: "node_family",
    xLabel: "d",
    yLabel: "mean absolute error",
  },
  "cond-vs-d": {
    x: "d",
    y: "cond",
    defaultSeries: "node_family",
    xLabel: "d",
    yLabel: "condition number",
  },
};

/** Group report rows into one curve per distinct series value. */
export function extractFigureData(rows: ReportRow[], spec: FigureSpec): FigureData {
  const layout = KIND_LAYOUT[spec.kind];
  if (!layout) {
    throw new SchemaError(`unknown figure kind: ${spec.kind}`);
  }
  const series = spec.series ?? layout.defaultSeries;
  const selected = spec.kind === "pointwise" ? pointwiseRows(rows) : summaryRows(rows);

  const groups = new Map<string, Array<{ x: number; y: number }>>();
  for (const row of selected) {
    const key = row[series];
    const x = Number(row[layout.x]);
    const y = Number(row[layout.y]);
    if (!Number.isFinite(x) || !Number.isFinite(y) || y <= 0) {
      continue; // exact zeros cannot appear on a log axis
    }
    if (!groups.has(key)) {
      groups.set(key, []);
    }
    groups.get(key)!.push({ x, y });
  }

  const curves: Curve[] = [...groups.entries()].map(([value, points]) => {
    const pretty = Number.isFinite(Number(value)) && value !== ""
      ? String(Number(value))
      : value || "(none)";
    return {
      label: `${series}=${pretty}`,
      points: points.slice().sort((a, b) => a.x - b.x),
    };
  });
  curves.sort((a, b) => (a.label < b.label ? -1 : a.label > b.label ? 1 : 0));
  return { xLabel: layout.xLabel, yLabel: layout.yLabel, curves };
}
