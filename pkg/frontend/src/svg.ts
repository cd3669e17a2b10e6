import { FigureData } from "./figure.js";

const WIDTH = 720;
const HEIGHT = 480;
const MARGIN = { top: 24, right: 24, bottom: 56, left: 80 };

const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

function fmt(v: number): string {
  // fixed short representation keeps output byte-stable
  return Number(v.toPrecision(6)).toString();
}

function tickLabel(exp: number): string {
  return `1e${exp}`;
}

/**
 * Render a semilog-y figure (log error axis, linear x axis) as an SVG
 * string. Purely a function of the data: no timestamps or random ids,
 * so identical input yields identical bytes.
 */
export function renderSvg(data: FigureData): string {
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="black"/>`,
  );

  const points = data.curves.flatMap((c) => c.points);
  if (points.length === 0) {
    parts.push(
      `<text x="${WIDTH / 2}" y="${HEIGHT / 2}" text-anchor="middle" fill="#b00">warning: no plottable data</text>`,
    );
    parts.push("</svg>");
    return parts.join("\n") + "\n";
  }

  const xs = points.map((p) => p.x);
  const logs = points.map((p) => Math.log10(p.y));
  let xMin = Math.min(...xs);
  let xMax = Math.max(...xs);
  if (xMin === xMax) {
    xMin -= 0.5;
    xMax += 0.5;
  }
  const eMin = Math.floor(Math.min(...logs));
  const eMax = Math.ceil(Math.max(...logs)) === eMin ? eMin + 1 : Math.ceil(Math.max(...logs));

  const sx = (x: number) => MARGIN.left + ((x - xMin) / (xMax - xMin)) * plotW;
  const sy = (y: number) =>
    MARGIN.top + plotH - ((Math.log10(y) - eMin) / (eMax - eMin)) * plotH;

  // decade grid lines and y tick labels
  const decadeStep = Math.max(1, Math.ceil((eMax - eMin) / 10));
  for (let e = eMin; e <= eMax; e += decadeStep) {
    const y = MARGIN.top + plotH - ((e - eMin) / (eMax - eMin)) * plotH;
    parts.push(
      `<line x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + plotW}" y2="${fmt(y)}" stroke="#ddd"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${fmt(y + 4)}" text-anchor="end">${tickLabel(e)}</text>`,
    );
  }

  // x ticks: five evenly spaced
  for (let i = 0; i <= 4; i++) {
    const x = xMin + ((xMax - xMin) * i) / 4;
    const px = sx(x);
    parts.push(
      `<line x1="${fmt(px)}" y1="${MARGIN.top + plotH}" x2="${fmt(px)}" y2="${MARGIN.top + plotH + 6}" stroke="black"/>`,
    );
    parts.push(
      `<text x="${fmt(px)}" y="${MARGIN.top + plotH + 22}" text-anchor="middle">${fmt(x)}</text>`,
    );
  }

  // axis labels
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 12}" text-anchor="middle">${data.xLabel}</text>`,
  );
  parts.push(
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${data.yLabel}</text>`,
  );

  // curves and legend
  data.curves.forEach((curve, i) => {
    if (curve.points.length === 0) {
      return;
    }
    const color = PALETTE[i % PALETTE.length];
    const path = curve.points
      .map((p) => `${fmt(sx(p.x))},${fmt(sy(p.y))}`)
      .join(" ");
    parts.push(
      `<polyline points="${path}" fill="none" stroke="${color}" stroke-width="1.5" class="curve"/>`,
    );
    for (const p of curve.points) {
      parts.push(
        `<circle cx="${fmt(sx(p.x))}" cy="${fmt(sy(p.y))}" r="2" fill="${color}"/>`,
      );
    }
    const ly = MARGIN.top + 16 + i * 16;
    parts.push(
      `<line x1="${MARGIN.left + plotW - 150}" y1="${ly - 4}" x2="${MARGIN.left + plotW - 126}" y2="${ly - 4}" stroke="${color}" stroke-width="1.5"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left + plotW - 120}" y="${ly}">${curve.label}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
