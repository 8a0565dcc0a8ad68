/** Seeded force-directed layout (Fruchterman–Reingold with cooling).
 *
 * Deterministic for a fixed seed so rendered layouts are reproducible.
 */

export interface LayoutOptions {
  iterations?: number;
  seed?: number;
  size?: number;
}

/** mulberry32: small fast PRNG, plenty for layout jitter. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  nNodes: number,
  edges: Array<[number, number]>,
  opts: LayoutOptions = {},
): Array<[number, number]> {
  const iterations = opts.iterations ?? 250;
  const size = opts.size ?? 1.0;
  const rand = mulberry32(opts.seed ?? 1);
  const pos: Array<[number, number]> = Array.from({ length: nNodes }, () => [
    size * (rand() - 0.5),
    size * (rand() - 0.5),
  ]);
  if (nNodes <= 1) return pos;

  const k = size / Math.sqrt(nNodes); // ideal edge length
  const disp: Array<[number, number]> = Array.from({ length: nNodes }, () => [0, 0]);

  for (let iter = 0; iter < iterations; iter++) {
    const temp = (size / 10) * (1 - iter / iterations) + 1e-4;
    for (let i = 0; i < nNodes; i++) disp[i] = [0, 0];

    for (let i = 0; i < nNodes; i++) {
      for (let j = i + 1; j < nNodes; j++) {
        let dx = pos[i][0] - pos[j][0];
        let dy = pos[i][1] - pos[j][1];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-12) {
          dx = 1e-3 * (rand() - 0.5);
          dy = 1e-3 * (rand() - 0.5);
          d2 = dx * dx + dy * dy;
        }
        const repulse = (k * k) / d2;
        disp[i][0] += dx * repulse;
        disp[i][1] += dy * repulse;
        disp[j][0] -= dx * repulse;
        disp[j][1] -= dy * repulse;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u][0] - pos[v][0];
      const dy = pos[u][1] - pos[v][1];
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-6;
      const attract = (d * d) / k / d;
      disp[u][0] -= dx * attract;
      disp[u][1] -= dy * attract;
      disp[v][0] += dx * attract;
      disp[v][1] += dy * attract;
    }
    for (let i = 0; i < nNodes; i++) {
      const d = Math.sqrt(disp[i][0] ** 2 + disp[i][1] ** 2) || 1e-9;
      const step = Math.min(d, temp);
      pos[i][0] += (disp[i][0] / d) * step;
      pos[i][1] += (disp[i][1] / d) * step;
    }
  }
  return pos;
}
