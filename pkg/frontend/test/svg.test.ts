import { describe, expect, it } from 'vitest';

import { aggregate, parseCsv } from '../src/csv';
import { renderSvg } from '../src/svg';

const HEADER = 'method,param,trial,precision\n';

function flatCsv(): string {
  let text = HEADER;
  for (const p of [0.1, 1, 10]) {
    for (const trial of [0, 1]) text += `rl,${p},${trial},1\n`;
  }
  return text;
}

describe('renderSvg', () => {
  it('draws a flat line at the top for constant precision 1', () => {
    const svg = renderSvg(aggregate(parseCsv(flatCsv())));
    const match = svg.match(/<polyline points="([^"]+)"[^>]*data-method="rl"/);
    expect(match).not.toBeNull();
    const ys = match![1].split(' ').map((pt) => Number(pt.split(',')[1]));
    expect(new Set(ys).size).toBe(1);
  });

  it('adds one legend entry per method', () => {
    const text = HEADER + 'rl,1,0,0.5\nheat-standard,1,0,0.25\n';
    const svg = renderSvg(aggregate(parseCsv(text)));
    const legend = [...svg.matchAll(/class="legend">([^<]+)</g)].map((m) => m[1]);
    expect(legend).toEqual(['heat-standard', 'rl']);
    expect(svg.match(/<polyline/g)).toHaveLength(2);
  });

  it('is deterministic for identical input', () => {
    const series = aggregate(parseCsv(flatCsv()));
    expect(renderSvg(series)).toBe(renderSvg(series));
  });

  it('spaces a decade grid evenly on the log scale', () => {
    const svg = renderSvg(aggregate(parseCsv(flatCsv())));
    const match = svg.match(/<polyline points="([^"]+)"/);
    const xs = match![1].split(' ').map((pt) => Number(pt.split(',')[0]));
    expect(xs[1] - xs[0]).toBeCloseTo(xs[2] - xs[1], 6);
  });

  it('rejects non-positive parameters on the log scale but not linear', () => {
    const series = aggregate(parseCsv(HEADER + 'rl,0,0,0.5\nrl,1,0,0.5\n'));
    expect(() => renderSvg(series)).toThrowError(/linear-x/);
    expect(renderSvg(series, { logX: false })).toContain('<svg');
  });

  it('rejects empty input', () => {
    expect(() => renderSvg([])).toThrowError(/no method/);
  });
});
