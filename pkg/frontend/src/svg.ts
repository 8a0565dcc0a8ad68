/** Tiny SVG panel builder: one plot area with axes, ticks, markers, paths. */

import { Scale, formatTick } from "./scale.js";

export interface PanelGeometry {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export const DEFAULT_GEOMETRY: PanelGeometry = {
  width: 560,
  height: 420,
  marginLeft: 70,
  marginRight: 20,
  marginTop: 40,
  marginBottom: 55,
};

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export class SvgPanel {
  private parts: string[] = [];
  readonly geom: PanelGeometry;

  constructor(geom: PanelGeometry = DEFAULT_GEOMETRY) {
    this.geom = geom;
  }

  get plotArea(): { x: [number, number]; y: [number, number] } {
    const g = this.geom;
    return {
      x: [g.marginLeft, g.width - g.marginRight],
      y: [g.height - g.marginBottom, g.marginTop], // y grows downward in SVG
    };
  }

  axes(xScale: Scale, yScale: Scale, xLabel: string, yLabel: string, title: string): void {
    const g = this.geom;
    const [x0, x1] = [g.marginLeft, g.width - g.marginRight];
    const [y0, y1] = [g.height - g.marginBottom, g.marginTop];
    this.parts.push(
      `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" fill="none" stroke="#333"/>`,
    );
    for (const t of xScale.ticks()) {
      const px = xScale.apply(t);
      this.parts.push(
        `<line x1="${px.toFixed(2)}" y1="${y0}" x2="${px.toFixed(2)}" y2="${y0 + 5}" stroke="#333"/>`,
        `<text x="${px.toFixed(2)}" y="${y0 + 20}" font-size="12" text-anchor="middle">${esc(
          formatTick(t),
        )}</text>`,
      );
    }
    for (const t of yScale.ticks()) {
      const py = yScale.apply(t);
      this.parts.push(
        `<line x1="${x0 - 5}" y1="${py.toFixed(2)}" x2="${x0}" y2="${py.toFixed(2)}" stroke="#333"/>`,
        `<text x="${x0 - 8}" y="${(py + 4).toFixed(2)}" font-size="12" text-anchor="end">${esc(
          formatTick(t),
        )}</text>`,
      );
    }
    this.parts.push(
      `<text x="${(x0 + x1) / 2}" y="${g.height - 12}" font-size="14" text-anchor="middle">${esc(xLabel)}</text>`,
      `<text x="18" y="${(y0 + y1) / 2}" font-size="14" text-anchor="middle" transform="rotate(-90 18 ${(y0 + y1) / 2})">${esc(yLabel)}</text>`,
      `<text x="${(x0 + x1) / 2}" y="24" font-size="15" text-anchor="middle" font-weight="bold">${esc(title)}</text>`,
    );
  }

  markers(
    xs: number[],
    ys: number[],
    xScale: Scale,
    yScale: Scale,
    color: string,
    r = 3.5,
  ): void {
    xs.forEach((x, i) => {
      this.parts.push(
        `<circle cx="${xScale.apply(x).toFixed(2)}" cy="${yScale.apply(ys[i]).toFixed(2)}" r="${r}" ` +
          `fill="${color}" fill-opacity="0.8" stroke="none"/>`,
      );
    });
  }

  polyline(xs: number[], ys: number[], xScale: Scale, yScale: Scale, color: string): void {
    if (xs.length < 2) return;
    const pts = xs
      .map((x, i) => `${xScale.apply(x).toFixed(2)},${yScale.apply(ys[i]).toFixed(2)}`)
      .join(" ");
    this.parts.push(`<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.5"/>`);
  }

  circle(cx: number, cy: number, r: number, fill: string, opacity = 1): void {
    this.parts.push(
      `<circle cx="${cx.toFixed(2)}" cy="${cy.toFixed(2)}" r="${r.toFixed(2)}" fill="${fill}" fill-opacity="${opacity}"/>`,
    );
  }

  line(x1: number, y1: number, x2: number, y2: number, color: string, width = 1): void {
    this.parts.push(
      `<line x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" y2="${y2.toFixed(2)}" ` +
        `stroke="${color}" stroke-width="${width}"/>`,
    );
  }

  text(x: number, y: number, content: string, size = 13, anchor = "start"): void {
    this.parts.push(
      `<text x="${x.toFixed(2)}" y="${y.toFixed(2)}" font-size="${size}" text-anchor="${anchor}">${esc(content)}</text>`,
    );
  }

  render(): string {
    const g = this.geom;
    return (
      `<svg xmlns="http://www.w3.org/2000/svg" width="${g.width}" height="${g.height}" ` +
      `viewBox="0 0 ${g.width} ${g.height}" font-family="sans-serif">\n` +
      `<rect width="${g.width}" height="${g.height}" fill="white"/>\n` +
      this.parts.join("\n") +
      "\n</svg>\n"
    );
  }
}
