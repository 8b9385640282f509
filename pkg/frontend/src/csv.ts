/**
 * Reader for the simulator's CSV schema:
 *
 *   code,antennas,constellation,constraint,snr_db,trials,errors,ser
 *
 * Rows are grouped into one Curve per (code, antennas, constellation,
 * constraint) combination, sorted by SNR.
 */

export interface SerPoint {
  snrDb: number;
  trials: number;
  errors: number;
  ser: number;
}

export interface Curve {
  code: string;
  antennas: number;
  constellation: string;
  constraint: string;
  points: SerPoint[];
}

export const CSV_HEADER =
  "code,antennas,constellation,constraint,snr_db,trials,errors,ser";

export function parseCsv(text: string, source = "<csv>"): Curve[] {
  const lines = text
    .split(/\r?\n/)
    .map((l) => l.trim())
    .filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new Error(`${source}: empty CSV`);
  }
  if (lines[0] !== CSV_HEADER) {
    throw new Error(`${source}: unexpected header ${JSON.stringify(lines[0])}`);
  }
  if (lines.length === 1) {
    throw new Error(`${source}: CSV has a header but no data rows`);
  }
  const byKey = new Map<string, Curve>();
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 8) {
      throw new Error(`${source}:${i + 1}: expected 8 columns, got ${cells.length}`);
    }
    const [code, antennas, constellation, constraint, snr, trials, errors, ser] =
      cells;
    const key = [code, antennas, constellation, constraint].join("|");
    let curve = byKey.get(key);
    if (!curve) {
      curve = {
        code,
        antennas: parseIntStrict(antennas, source, i),
        constellation,
        constraint,
        points: [],
      };
      byKey.set(key, curve);
    }
    curve.points.push({
      snrDb: parseFloatStrict(snr, source, i),
      trials: parseIntStrict(trials, source, i),
      errors: parseIntStrict(errors, source, i),
      ser: parseFloatStrict(ser, source, i),
    });
  }
  const curves = [...byKey.values()];
  for (const curve of curves) {
    curve.points.sort((a, b) => a.snrDb - b.snrDb);
  }
  // deterministic ordering regardless of input row order
  curves.sort((a, b) =>
    keyOf(a) < keyOf(b) ? -1 : keyOf(a) > keyOf(b) ? 1 : 0,
  );
  return curves;
}

function keyOf(c: Curve): string {
  return [c.antennas, c.constraint, c.constellation, c.code].join("|");
}

function parseIntStrict(text: string, source: string, row: number): number {
  const value = Number(text);
  if (!Number.isInteger(value)) {
    throw new Error(`${source}:${row + 1}: ${JSON.stringify(text)} is not an integer`);
  }
  return value;
}

function parseFloatStrict(text: string, source: string, row: number): number {
  const value = Number(text);
  if (!Number.isFinite(value)) {
    throw new Error(`${source}:${row + 1}: ${JSON.stringify(text)} is not a number`);
  }
  return value;
}

/** Group curves into one figure per (antennas, constraint) pair. */
export function groupForFigures(curves: Curve[]): Map<string, Curve[]> {
  const groups = new Map<string, Curve[]>();
  for (const curve of curves) {
    const key = `${curve.antennas}tx_${curve.constraint}`;
    const list = groups.get(key) ?? [];
    list.push(curve);
    groups.set(key, list);
  }
  return new Map([...groups.entries()].sort((a, b) => (a[0] < b[0] ? -1 : 1)));
}
