/**
 * Parsing and aggregation for sweep result CSVs.
 *
 * Expected format (exactly as the sweep tool writes it):
 *   method,param,trial,precision
 *   rl,0.001,0,0.85
 */

export interface SweepRow {
  method: string;
  param: number;
  trial: number;
  precision: number;
}

/** One plotted point: mean precision over trials at a parameter value. */
export interface SeriesPoint {
  param: number;
  mean: number;
  std: number;
  nTrials: number;
}

export interface Series {
  method: string;
  points: SeriesPoint[];
}

export class CsvError extends Error {
  constructor(public file: string, public line: number, message: string) {
    super(`${file}:${line}: ${message}`);
  }
}

const HEADER = 'method,param,trial,precision';

export function parseCsv(text: string, file = '<input>'): SweepRow[] {
  const lines = text.split(/\r?\n/);
  if (lines.length === 0 || lines[0].trim() !== HEADER) {
    throw new CsvError(file, 1, `expected header "${HEADER}"`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === '') continue;
    const parts = line.split(',');
    if (parts.length !== 4) {
      throw new CsvError(file, i + 1, `expected 4 fields, got ${parts.length}`);
    }
    const [method, paramText, trialText, precText] = parts;
    const param = Number(paramText);
    const trial = Number(trialText);
    const precision = Number(precText);
    if (method === '' || !isFinite(param) || !Number.isInteger(trial) || !isFinite(precision)) {
      throw new CsvError(file, i + 1, `malformed row "${line}"`);
    }
    if (precision < 0 || precision > 1) {
      throw new CsvError(file, i + 1, `precision ${precision} outside [0, 1]`);
    }
    rows.push({ method, param, trial, precision });
  }
  return rows;
}

function mean(values: number[]): number {
  return values.reduce((a, b) => a + b, 0) / values.length;
}

function sampleStd(values: number[], m: number): number {
  if (values.length < 2) return 0;
  const ss = values.reduce((a, b) => a + (b - m) * (b - m), 0);
  return Math.sqrt(ss / (values.length - 1));
}

/** Group rows into one series per method, points sorted by parameter. */
export function aggregate(rows: SweepRow[]): Series[] {
  const byMethod = new Map<string, Map<number, number[]>>();
  for (const row of rows) {
    let byParam = byMethod.get(row.method);
    if (!byParam) {
      byParam = new Map();
      byMethod.set(row.method, byParam);
    }
    let values = byParam.get(row.param);
    if (!values) {
      values = [];
      byParam.set(row.param, values);
    }
    values.push(row.precision);
  }
  const series: Series[] = [];
  for (const method of [...byMethod.keys()].sort()) {
    const byParam = byMethod.get(method)!;
    const points = [...byParam.keys()]
      .sort((a, b) => a - b)
      .map((param) => {
        const values = byParam.get(param)!;
        const m = mean(values);
        return { param, mean: m, std: sampleStd(values, m), nTrials: values.length };
      });
    series.push({ method, points });
  }
  return series;
}
