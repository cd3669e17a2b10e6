import { readFileSync, writeFileSync } from "node:fs";

import { parseReportCsv } from "./csv.js";
import { extractFigureData, FigureSpec } from "./figure.js";
import { renderSvg } from "./svg.js";

/** Render a figure spec against CSV text and return the SVG string. */
export function renderFromCsvText(text: string, spec: FigureSpec): string {
  return renderSvg(extractFigureData(parseReportCsv(text), spec));
}

/** Read a CSV report, render the figure and write it to `outPath`. */
export function renderFile(csvPath: string, outPath: string, spec: FigureSpec): void {
  const svg = renderFromCsvText(readFileSync(csvPath, "utf8"), spec);
  writeFileSync(outPath, svg, "utf8");
}
