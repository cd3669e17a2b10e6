export {
  parseReportCsv,
  pointwiseRows,
  summaryRows,
  SchemaError,
  REPORT_COLUMNS,
} from "./csv.js";
export type { ReportColumn, ReportRow } from "./csv.js";
export { extractFigureData } from "./figure.js";
export type { Curve, FigureData, FigureKind, FigureSpec } from "./figure.js";
export { renderSvg } from "./svg.js";
export { renderFile, renderFromCsvText } from "./render.js";
