/**
 * Hand-rolled SVG figure builder: linear x axis, log10 y axis, one
 * polyline per series. No timestamps, no randomness; identical inputs
 * produce identical bytes.
 */

export interface Series {
  label: string;
  color: string;
  points: Array<[number, number]>; // (x, y), y > 0
  dash?: string;
}

export interface FigureSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

const WIDTH = 760;
const HEIGHT = 520;
const MARGIN = { top: 48, right: 28, bottom: 56, left: 76 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

function fmt(x: number): string {
  // fixed-precision, trailing-zero-free coordinate formatting
  return Number(x.toFixed(2)).toString();
}

function niceTicks(lo: number, hi: number, approxCount: number): number[] {
  const span = hi - lo;
  if (span <= 0) return [lo];
  const step = Math.pow(10, Math.floor(Math.log10(span / approxCount)));
  const candidates = [step, 2 * step, 5 * step, 10 * step];
  const chosen =
    candidates.find((s) => span / s <= approxCount) ?? 10 * step;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / chosen) * chosen; t <= hi + 1e-9; t += chosen) {
    ticks.push(Number(t.toFixed(9)));
  }
  return ticks;
}

export function renderFigure(spec: FigureSpec): string {
  const xs = spec.series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = spec.series.flatMap((s) => s.points.map((p) => p[1]));
  if (xs.length === 0) {
    throw new Error(`figure ${JSON.stringify(spec.title)} has no positive-SER points`);
  }
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  const yLoDecade = Math.floor(Math.log10(Math.min(...ys)));
  const yHiDecade = Math.ceil(Math.log10(Math.max(...ys)));

  const sx = (x: number) =>
    MARGIN.left + ((x - xLo) / Math.max(xHi - xLo, 1e-12)) * PLOT_W;
  const sy = (y: number) =>
    MARGIN.top +
    ((yHiDecade - Math.log10(y)) / Math.max(yHiDecade - yLoDecade, 1e-12)) *
      PLOT_H;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${WIDTH / 2}" y="26" text-anchor="middle" font-size="16">${escapeXml(spec.title)}</text>`,
  );

  // frame
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" fill="none" stroke="#333" stroke-width="1"/>`,
  );

  // y grid: one line per decade
  for (let d = yLoDecade; d <= yHiDecade; d++) {
    const y = sy(Math.pow(10, d));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + PLOT_W}" y2="${fmt(y)}" stroke="#ddd" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${fmt(y + 4)}" text-anchor="end" font-size="12">1e${d}</text>`,
    );
  }

  // x ticks
  for (const t of niceTicks(xLo, xHi, 10)) {
    const x = sx(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${MARGIN.top + PLOT_H}" x2="${fmt(x)}" y2="${MARGIN.top + PLOT_H + 5}" stroke="#333" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${fmt(x)}" y="${MARGIN.top + PLOT_H + 20}" text-anchor="middle" font-size="12">${t}</text>`,
    );
  }

  parts.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="13">${escapeXml(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="20" y="${MARGIN.top + PLOT_H / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 20 ${MARGIN.top + PLOT_H / 2})">${escapeXml(spec.yLabel)}</text>`,
  );

  // series
  spec.series.forEach((series, idx) => {
    const coords = series.points
      .map(([x, y]) => `${fmt(sx(x))},${fmt(sy(y))}`)
      .join(" ");
    const dash = series.dash ? ` stroke-dasharray="${series.dash}"` : "";
    parts.push(
      `<polyline points="${coords}" fill="none" stroke="${series.color}" stroke-width="2"${dash}/>`,
    );
    for (const [x, y] of series.points) {
      parts.push(
        `<circle cx="${fmt(sx(x))}" cy="${fmt(sy(y))}" r="3" fill="${series.color}"/>`,
      );
    }
    // legend
    const ly = MARGIN.top + 16 + idx * 20;
    const lx = MARGIN.left + 16;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 26}" y2="${ly - 4}" stroke="${series.color}" stroke-width="2"${dash}/>`,
    );
    parts.push(
      `<text x="${lx + 32}" y="${ly}" font-size="12">${escapeXml(series.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
