/**
 * SER-curve figure renderer.
 *
 * Reads one or more simulator CSV files and writes one SVG per
 * (antenna count, power constraint) pair found in the data:
 *
 *   node dist/render.js --in peak.csv avg.csv --out figures/
 *
 * Zero-SER points cannot be placed on a log axis and are dropped from
 * the drawn polylines. Output bytes depend only on the input rows.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { basename, join } from "node:path";

import { Curve, groupForFigures, parseCsv } from "./csv.js";
import { FigureSpec, Series, renderFigure } from "./svg.js";

const PALETTE: Record<string, string> = {
  nzcod: "#c0392b",
  scod: "#2c3e50",
  r3: "#2980b9",
};
const FALLBACK_COLORS = ["#8e44ad", "#16a085", "#d35400", "#7f8c8d"];
const DASHES: Record<string, string | undefined> = { scod: "6 4", r3: "2 3" };

export interface CliArgs {
  inputs: string[];
  outDir: string;
}

export function parseArgs(argv: string[]): CliArgs {
  const inputs: string[] = [];
  let outDir: string | undefined;
  let mode: "in" | "out" | null = null;
  for (const arg of argv) {
    if (arg === "--in") {
      mode = "in";
    } else if (arg === "--out") {
      mode = "out";
    } else if (arg.startsWith("--")) {
      throw new Error(`unknown flag ${arg}`);
    } else if (mode === "in") {
      inputs.push(arg);
    } else if (mode === "out") {
      outDir = arg;
      mode = null;
    } else {
      throw new Error(`unexpected argument ${arg}`);
    }
  }
  if (inputs.length === 0) throw new Error("pass at least one CSV via --in");
  if (!outDir) throw new Error("pass an output directory via --out");
  return { inputs: [...inputs].sort(), outDir };
}

function seriesColor(code: string, index: number): string {
  return PALETTE[code] ?? FALLBACK_COLORS[index % FALLBACK_COLORS.length];
}

export function figureForGroup(key: string, curves: Curve[]): FigureSpec {
  const { antennas, constellation, constraint } = {
    antennas: curves[0].antennas,
    constellation: curves[0].constellation,
    constraint: curves[0].constraint,
  };
  const constraintName = constraint === "avg" ? "average" : constraint;
  const series: Series[] = curves.map((curve, idx) => ({
    label: `${curve.code} (${curve.antennas} tx)`,
    color: seriesColor(curve.code, idx),
    dash: DASHES[curve.code],
    points: curve.points
      .filter((p) => p.ser > 0)
      .map((p) => [p.snrDb, p.ser] as [number, number]),
  }));
  return {
    title: `${antennas} transmit antennas, ${constellation.toUpperCase()}, ${constraintName} power constraint`,
    xLabel: "SNR (dB)",
    yLabel: "symbol error rate",
    series,
  };
}

export function renderAll(
  inputs: Array<{ name: string; text: string }>,
): Map<string, string> {
  const curves = inputs.flatMap(({ name, text }) => parseCsv(text, name));
  const out = new Map<string, string>();
  for (const [key, group] of groupForFigures(curves)) {
    out.set(`ser_${key}.svg`, renderFigure(figureForGroup(key, group)));
  }
  return out;
}

export function main(argv: string[]): number {
  const args = parseArgs(argv);
  const inputs = args.inputs.map((path) => ({
    name: basename(path),
    text: readFileSync(path, "utf-8"),
  }));
  const figures = renderAll(inputs); // parse everything before writing
  mkdirSync(args.outDir, { recursive: true });
  for (const [name, svg] of figures) {
    const target = join(args.outDir, name);
    writeFileSync(target, svg, "utf-8");
    console.log(`wrote ${target}`);
  }
  return 0;
}

const isDirectRun =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${process.argv[1]}`).href;
if (isDirectRun) {
  try {
    process.exit(main(process.argv.slice(2)));
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    process.exit(1);
  }
}
