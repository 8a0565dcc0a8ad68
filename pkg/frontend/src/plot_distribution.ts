/** Render one distribution panel from a histogram CSV.
 *
 *   plot_distribution <histogram.csv> <out.svg> [--loglog|--linlog] [--title T]
 *
 * Without an explicit scale flag the binning recorded in the CSV metadata
 * decides: log-binned data plots log-log, linear-binned data lin-log
 * (log y either way). Zero-density bins are dropped on log axes.
 */

import { writeFileSync } from "fs";
import { pathToFileURL } from "url";

import { HistogramTable, readHistogramCsv } from "./csv.js";
import { linearScale, logScale, padDomain, Scale } from "./scale.js";
import { SvgPanel } from "./svg.js";

export class UsageError extends Error {}

export interface DistributionArgs {
  csvPath: string;
  outPath: string;
  scale: "loglog" | "linlog" | null;
  title: string | null;
}

export function parseArgs(argv: string[]): DistributionArgs {
  const positional: string[] = [];
  let scale: "loglog" | "linlog" | null = null;
  let title: string | null = null;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === "--loglog") scale = "loglog";
    else if (a === "--linlog") scale = "linlog";
    else if (a === "--title") title = argv[++i] ?? "";
    else if (a.startsWith("--")) throw new UsageError(`unknown flag ${a}`);
    else positional.push(a);
  }
  if (positional.length !== 2) {
    throw new UsageError("usage: plot_distribution <histogram.csv> <out.svg> [--loglog|--linlog]");
  }
  return { csvPath: positional[0], outPath: positional[1], scale, title };
}

function pickScale(args: DistributionArgs, table: HistogramTable): "loglog" | "linlog" {
  if (args.scale) return args.scale;
  const binning = table.meta.binning ?? "";
  return binning.startsWith("log") ? "loglog" : "linlog";
}

export function run(argv: string[]): string {
  const args = parseArgs(argv);
  const table = readHistogramCsv(args.csvPath);
  const kind = pickScale(args, table);
  const logX = kind === "loglog";

  // bin centers: geometric on a log axis, arithmetic otherwise
  const points = table.rows
    .filter((r) => r.density > 0)
    .map((r) => ({
      x: logX ? Math.sqrt(r.binLower * r.binUpper) : 0.5 * (r.binLower + r.binUpper),
      y: r.density,
    }))
    .filter((p) => !logX || p.x > 0);
  if (points.length === 0) throw new UsageError(`${args.csvPath}: nothing to plot`);

  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const panel = new SvgPanel();
  const { x: rx, y: ry } = panel.plotArea;
  const xScale: Scale = logX
    ? logScale(padDomain("log", Math.min(...xs), Math.max(...xs)), rx)
    : linearScale(padDomain("linear", Math.min(...xs), Math.max(...xs)), rx);
  const yScale = logScale(padDomain("log", Math.min(...ys), Math.max(...ys)), ry);

  const quantity = table.meta.quantity ?? "value";
  const xLabel = quantity.includes("degree") ? "degree k" : "edge weight w";
  const title =
    args.title ??
    `${quantity} (${table.meta.disorder ?? "?"}, n=${table.meta.n ?? "?"}) — ${kind}`;
  panel.axes(xScale, yScale, xLabel, "density", title);
  panel.polyline(xs, ys, xScale, yScale, "#888");
  panel.markers(xs, ys, xScale, yScale, "#1f6fb2");
  const svg = panel.render();
  writeFileSync(args.outPath, svg);
  return args.outPath;
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
