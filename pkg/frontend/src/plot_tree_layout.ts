/** Draw a small spanning tree with node area proportional to the node's
 * degree in the underlying graph (hubs pop out visually).
 *
 *   plot_tree_layout <graph.txt> <tree.txt> <out.svg> [--max-nodes 500] [--seed 1]
 *
 * Uses a seeded force-directed layout of the tree edges; refuses inputs
 * larger than --max-nodes.
 */

import { writeFileSync } from "fs";
import { pathToFileURL } from "url";

import { degreesOf, readEdgeList } from "./edgelist.js";
import { forceLayout } from "./layout.js";
import { SvgPanel } from "./svg.js";
import { UsageError } from "./plot_distribution.js";

export interface TreeLayoutArgs {
  graphPath: string;
  treePath: string;
  outPath: string;
  maxNodes: number;
  seed: number;
}

export function parseArgs(argv: string[]): TreeLayoutArgs {
  const positional: string[] = [];
  let maxNodes = 500;
  let seed = 1;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === "--max-nodes") maxNodes = Number(argv[++i]);
    else if (a === "--seed") seed = Number(argv[++i]);
    else if (a.startsWith("--")) throw new UsageError(`unknown flag ${a}`);
    else positional.push(a);
  }
  if (positional.length !== 3 || !Number.isFinite(maxNodes) || !Number.isFinite(seed)) {
    throw new UsageError(
      "usage: plot_tree_layout <graph.txt> <tree.txt> <out.svg> [--max-nodes 500] [--seed 1]",
    );
  }
  return { graphPath: positional[0], treePath: positional[1], outPath: positional[2], maxNodes, seed };
}

export function run(argv: string[]): string {
  const args = parseArgs(argv);
  const graph = readEdgeList(args.graphPath);
  const tree = readEdgeList(args.treePath);
  if (graph.nNodes > args.maxNodes) {
    throw new UsageError(
      `graph has ${graph.nNodes} nodes, above the --max-nodes limit of ${args.maxNodes}`,
    );
  }
  if (tree.nNodes !== graph.nNodes) {
    throw new UsageError(
      `tree is over ${tree.nNodes} nodes but the graph has ${graph.nNodes}`,
    );
  }

  const degrees = degreesOf(graph);
  const edges = tree.edges.map(([u, v]) => [u, v] as [number, number]);
  const pos = forceLayout(graph.nNodes, edges, { seed: args.seed, iterations: 300 });

  const size = 640;
  const margin = 30;
  const panel = new SvgPanel({
    width: size,
    height: size,
    marginLeft: 0,
    marginRight: 0,
    marginTop: 0,
    marginBottom: 0,
  });
  const xs = pos.map((p) => p[0]);
  const ys = pos.map((p) => p[1]);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const span = Math.max(xMax - xMin, yMax - yMin) || 1;
  const sx = (x: number) => margin + ((x - xMin) / span) * (size - 2 * margin);
  const sy = (y: number) => margin + ((y - yMin) / span) * (size - 2 * margin);

  for (const [u, v] of edges) {
    panel.line(sx(pos[u][0]), sy(pos[u][1]), sx(pos[v][0]), sy(pos[v][1]), "#999", 0.8);
  }
  const maxDegree = Math.max(...degrees, 1);
  for (let i = 0; i < graph.nNodes; i++) {
    // area proportional to degree in the underlying graph
    const r = 1.5 + 10 * Math.sqrt(degrees[i] / maxDegree);
    panel.circle(sx(pos[i][0]), sy(pos[i][1]), r, "#1f6fb2", 0.85);
  }
  panel.text(
    12,
    size - 10,
    `n=${graph.nNodes}, disorder=${graph.meta.disorder ?? "?"}, layout seed=${args.seed}`,
    12,
  );

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
