/** Linear and logarithmic axis scales with tick generation. */

export type ScaleKind = "linear" | "log";

export interface Scale {
  kind: ScaleKind;
  domain: [number, number];
  range: [number, number];
  apply(x: number): number;
  ticks(): number[];
}

function niceStep(span: number, target = 5): number {
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  for (const mult of [1, 2, 5, 10]) {
    if (mult * mag >= raw) return mult * mag;
  }
  return 10 * mag;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  return {
    kind: "linear",
    domain,
    range,
    apply: (x) => r0 + ((x - d0) / span) * (r1 - r0),
    ticks: () => {
      const step = niceStep(span);
      const first = Math.ceil(d0 / step) * step;
      const out: number[] = [];
      for (let t = first; t <= d1 + 1e-9 * Math.abs(step); t += step) {
        out.push(Math.abs(t) < 1e-12 ? 0 : t);
      }
      return out;
    },
  };
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new RangeError(`log scale requires a positive domain, got [${d0}, ${d1}]`);
  }
  const [r0, r1] = range;
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0 || 1;
  return {
    kind: "log",
    domain,
    range,
    apply: (x) => r0 + ((Math.log10(x) - l0) / span) * (r1 - r0),
    ticks: () => {
      const out: number[] = [];
      for (let e = Math.ceil(l0 - 1e-9); Math.pow(10, e) <= d1 * (1 + 1e-9); e++) {
        const t = Math.pow(10, e);
        if (t >= d0 * (1 - 1e-9)) out.push(t);
      }
      return out.length >= 2 ? out : [d0, d1];
    },
  };
}

export function formatTick(x: number): string {
  if (x === 0) return "0";
  const exp = Math.log10(Math.abs(x));
  if (Number.isInteger(exp) && (exp >= 4 || exp <= -3)) return `1e${exp}`;
  if (Math.abs(x) >= 1e4 || Math.abs(x) < 1e-3) return x.toExponential(1);
  return `${Number(x.toPrecision(4))}`;
}

/** Pad a positive domain multiplicatively (log) or additively (linear). */
export function padDomain(kind: ScaleKind, lo: number, hi: number): [number, number] {
  if (kind === "log") return [lo / 1.5, hi * 1.5];
  const pad = 0.05 * (hi - lo || 1);
  return [lo - pad, hi + pad];
}
