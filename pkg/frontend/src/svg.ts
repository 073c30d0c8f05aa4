/**
 * SVG rendering of precision-vs-parameter curves.
 *
 * One line per method (mean over trials) with a shaded band at +/- one
 * sample standard deviation. Output is a pure function of the input
 * series: no timestamps or other run-dependent content is embedded.
 */

import { Series } from './csv';

export interface FigureOptions {
  logX: boolean;
  xLabel: string;
  width: number;
  height: number;
}

export const DEFAULT_OPTIONS: FigureOptions = {
  logX: true,
  xLabel: 'parameter',
  width: 640,
  height: 420,
};

const COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];
const MARGIN = { top: 20, right: 20, bottom: 70, left: 55 };

function fmt(value: number): string {
  return Number(value.toFixed(2)).toString();
}

function fmtParam(value: number): string {
  if (value !== 0 && (Math.abs(value) < 1e-2 || Math.abs(value) >= 1e3)) {
    return value.toExponential(0).replace('e+', 'e');
  }
  return Number(value.toPrecision(3)).toString();
}

export function renderSvg(series: Series[], options: Partial<FigureOptions> = {}): string {
  if (series.length === 0) {
    throw new Error('nothing to plot: no method series present');
  }
  const opts = { ...DEFAULT_OPTIONS, ...options };
  const params = series.flatMap((s) => s.points.map((p) => p.param));
  if (opts.logX && params.some((p) => p <= 0)) {
    throw new Error('log-x scale requires strictly positive parameters (use --linear-x)');
  }
  const xRaw = opts.logX ? params.map(Math.log10) : params;
  let xMin = Math.min(...xRaw);
  let xMax = Math.max(...xRaw);
  if (xMin === xMax) {
    xMin -= 0.5;
    xMax += 0.5;
  }
  const plotW = opts.width - MARGIN.left - MARGIN.right;
  const plotH = opts.height - MARGIN.top - MARGIN.bottom;
  const xOf = (param: number) => {
    const v = opts.logX ? Math.log10(param) : param;
    return MARGIN.left + ((v - xMin) / (xMax - xMin)) * plotW;
  };
  const yOf = (precision: number) => MARGIN.top + (1 - precision) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${opts.width}" height="${opts.height}" ` +
      `viewBox="0 0 ${opts.width} ${opts.height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${opts.width}" height="${opts.height}" fill="white"/>`);

  // axes and gridlines
  for (const tick of [0, 0.25, 0.5, 0.75, 1]) {
    const y = yOf(tick);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" stroke="#ddd"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${y + 4}" text-anchor="end">${fmt(tick)}</text>`,
    );
  }
  const uniqueParams = [...new Set(params)].sort((a, b) => a - b);
  const step = Math.max(1, Math.ceil(uniqueParams.length / 8));
  for (let i = 0; i < uniqueParams.length; i += step) {
    const p = uniqueParams[i];
    const x = xOf(p);
    parts.push(
      `<line x1="${x}" y1="${MARGIN.top + plotH}" x2="${x}" y2="${MARGIN.top + plotH + 5}" stroke="#333"/>`,
    );
    parts.push(
      `<text x="${x}" y="${MARGIN.top + plotH + 18}" text-anchor="middle">${fmtParam(p)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" ` +
      `fill="none" stroke="#333"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${opts.height - 36}" text-anchor="middle">` +
      `${opts.xLabel}${opts.logX ? ' (log scale)' : ''}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">mean precision</text>`,
  );

  // bands first so lines draw on top
  series.forEach((s, idx) => {
    const color = COLORS[idx % COLORS.length];
    const upper = s.points.map((p) => `${xOf(p.param)},${yOf(Math.min(1, p.mean + p.std))}`);
    const lower = s.points
      .slice()
      .reverse()
      .map((p) => `${xOf(p.param)},${yOf(Math.max(0, p.mean - p.std))}`);
    parts.push(
      `<polygon points="${upper.concat(lower).join(' ')}" fill="${color}" fill-opacity="0.15"/>`,
    );
  });
  series.forEach((s, idx) => {
    const color = COLORS[idx % COLORS.length];
    const pts = s.points.map((p) => `${xOf(p.param)},${yOf(p.mean)}`).join(' ');
    parts.push(
      `<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.8" ` +
        `class="series" data-method="${s.method}"/>`,
    );
  });

  // legend
  series.forEach((s, idx) => {
    const color = COLORS[idx % COLORS.length];
    const y = MARGIN.top + 14 + idx * 18;
    const x = MARGIN.left + 12;
    parts.push(`<line x1="${x}" y1="${y - 4}" x2="${x + 22}" y2="${y - 4}" stroke="${color}" stroke-width="1.8"/>`);
    parts.push(`<text x="${x + 28}" y="${y}" class="legend">${s.method}</text>`);
  });

  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${opts.height - 14}" text-anchor="middle" ` +
      `fill="#666">line = mean over trials, band = ±1 sample std</text>`,
  );
  parts.push('</svg>');
  return parts.join('\n');
}
