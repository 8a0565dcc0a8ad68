/** Render the MST-efficiency panel: alpha(n) for both disorder types on
 * shared log-log axes, with across-seed standard deviations as error bars.
 *
 *   plot_efficiency <efficiency_type1.csv> <efficiency_type2.csv> <out.svg>
 */

import { writeFileSync } from "fs";
import { pathToFileURL } from "url";

import { EfficiencyTable, readEfficiencyCsv } from "./csv.js";
import { logScale, padDomain } from "./scale.js";
import { SvgPanel } from "./svg.js";
import { UsageError } from "./plot_distribution.js";

const COLORS = ["#1f6fb2", "#c23b22"];

export function run(argv: string[]): string {
  if (argv.length !== 3) {
    throw new UsageError("usage: plot_efficiency <efficiency_type1.csv> <efficiency_type2.csv> <out.svg>");
  }
  const [path1, path2, outPath] = argv;
  const tables: EfficiencyTable[] = [readEfficiencyCsv(path1), readEfficiencyCsv(path2)];

  const allN = tables.flatMap((t) => t.rows.map((r) => r.n));
  const allAlpha = tables.flatMap((t) => t.rows.map((r) => r.meanAlpha));
  const panel = new SvgPanel();
  const { x: rx, y: ry } = panel.plotArea;
  const xScale = logScale(padDomain("log", Math.min(...allN), Math.max(...allN)), rx);
  const yScale = logScale(padDomain("log", Math.min(...allAlpha), Math.max(...allAlpha)), ry);
  panel.axes(xScale, yScale, "graph size n", "efficiency alpha", "MST efficiency");

  tables.forEach((table, idx) => {
    const rows = [...table.rows].sort((a, b) => a.n - b.n);
    const xs = rows.map((r) => r.n);
    const ys = rows.map((r) => r.meanAlpha);
    const color = COLORS[idx];
    rows.forEach((r) => {
      // std error bars, clipped to the positive half-plane for the log axis
      const lo = Math.max(r.meanAlpha - r.stdAlpha, 1e-12);
      const hi = r.meanAlpha + r.stdAlpha;
      const px = xScale.apply(r.n);
      panel.line(px, yScale.apply(lo), px, yScale.apply(hi), color, 1);
    });
    panel.polyline(xs, ys, xScale, yScale, color);
    panel.markers(xs, ys, xScale, yScale, color);
    const label = table.meta.disorder ?? `series ${idx + 1}`;
    panel.text(panel.geom.width - 170, panel.geom.marginTop + 20 + 18 * idx, label, 13);
    panel.circle(panel.geom.width - 180, panel.geom.marginTop + 16 + 18 * idx, 4, color);
  });

  const svg = panel.render();
  writeFileSync(outPath, svg);
  return outPath;
}

export function main(argv: string[] = process.argv.slice(2)): number {
  try {
    const out = run(argv);
    console.log(`wrote ${out}`);
    return 0;
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exitCode = main();
}
