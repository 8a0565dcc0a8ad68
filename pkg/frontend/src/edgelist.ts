/** Parser for the edge-list text format (`# nodes=N edges=M` header,
 * one `u v w` line per edge; tree files add `# tree weight=W`).
 */

import { readFileSync } from "fs";

export class EdgeListError extends Error {}

export interface EdgeList {
  nNodes: number;
  edges: Array<[number, number, number]>;
  meta: Record<string, string>;
}

export function readEdgeList(path: string): EdgeList {
  const meta: Record<string, string> = {};
  const edges: Array<[number, number, number]> = [];
  const lines = readFileSync(path, "utf8").split("\n");
  lines.forEach((raw, idx) => {
    const line = raw.trim();
    if (line === "") return;
    if (line.startsWith("#")) {
      for (const token of line.slice(1).trim().split(/\s+/)) {
        const eq = token.indexOf("=");
        meta[eq > 0 ? token.slice(0, eq) : token] = eq > 0 ? token.slice(eq + 1) : "";
      }
      return;
    }
    const parts = line.split(/\s+/);
    if (parts.length !== 3) {
      throw new EdgeListError(`${path}:${idx + 1}: expected "u v w", got ${JSON.stringify(line)}`);
    }
    const [u, v, w] = [Number(parts[0]), Number(parts[1]), Number(parts[2])];
    if (!Number.isInteger(u) || !Number.isInteger(v) || Number.isNaN(w)) {
      throw new EdgeListError(`${path}:${idx + 1}: malformed edge line`);
    }
    edges.push([u, v, w]);
  });
  if (!("nodes" in meta)) throw new EdgeListError(`${path}: missing "# nodes=N" header`);
  const nNodes = Number(meta.nodes);
  if (!Number.isInteger(nNodes) || nNodes < 0) {
    throw new EdgeListError(`${path}: bad node count ${JSON.stringify(meta.nodes)}`);
  }
  return { nNodes, edges, meta };
}

export function degreesOf(list: EdgeList): number[] {
  const deg = new Array<number>(list.nNodes).fill(0);
  for (const [u, v] of list.edges) {
    deg[u] += 1;
    deg[v] += 1;
  }
  return deg;
}
