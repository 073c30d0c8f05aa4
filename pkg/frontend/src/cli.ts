/**
 * plot_sweep: render one or more sweep CSVs into a single SVG figure.
 *
 * Usage: plot_sweep <csv>... --out fig.svg [--linear-x] [--x-label TEXT]
 */

import { readFileSync, writeFileSync } from 'fs';

import { aggregate, parseCsv, CsvError, SweepRow } from './csv';
import { renderSvg } from './svg';

export interface CliArgs {
  inputs: string[];
  out: string;
  logX: boolean;
  xLabel: string;
}

export function parseArgs(argv: string[]): CliArgs {
  const inputs: string[] = [];
  let out: string | null = null;
  let logX = true;
  let xLabel = 'parameter';
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === '--out') {
      out = argv[++i];
      if (out === undefined) throw new Error('--out requires a path');
    } else if (arg === '--linear-x') {
      logX = false;
    } else if (arg === '--x-label') {
      xLabel = argv[++i];
      if (xLabel === undefined) throw new Error('--x-label requires text');
    } else if (arg.startsWith('--')) {
      throw new Error(`unknown option ${arg}`);
    } else {
      inputs.push(arg);
    }
  }
  if (inputs.length === 0) throw new Error('no input CSVs given');
  if (!out) throw new Error('--out is required');
  return { inputs, out, logX, xLabel };
}

export function run(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    process.stderr.write('usage: plot_sweep <csv>... --out fig.svg [--linear-x] [--x-label TEXT]\n');
    return 2;
  }
  try {
    const rows: SweepRow[] = [];
    for (const file of args.inputs) {
      rows.push(...parseCsv(readFileSync(file, 'utf8'), file));
    }
    const svg = renderSvg(aggregate(rows), { logX: args.logX, xLabel: args.xLabel });
    writeFileSync(args.out, svg + '\n');
    return 0;
  } catch (err) {
    if (err instanceof CsvError) {
      process.stderr.write(`error: ${err.message}\n`);
    } else {
      process.stderr.write(`error: ${(err as Error).message}\n`);
    }
    return 1;
  }
}

if (require.main === module) {
  process.exit(run(process.argv.slice(2)));
}
