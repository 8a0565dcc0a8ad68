/** Readers for the experiment CSV outputs.
 *
 * Both formats carry `# key=value` comment headers followed by a column
 * header row. A missing or renamed column is a hard error naming the
 * column, so schema drift fails loudly instead of producing empty plots.
 */

import { readFileSync } from "fs";

export class SchemaError extends Error {}

export interface HistogramRow {
  binLower: number;
  binUpper: number;
  count: number;
  density: number;
}

export interface HistogramTable {
  rows: HistogramRow[];
  meta: Record<string, string>;
}

export interface EfficiencyRow {
  n: number;
  meanAlpha: number;
  stdAlpha: number;
  realizations: number;
}

export interface EfficiencyTable {
  rows: EfficiencyRow[];
  meta: Record<string, string>;
}

const HISTOGRAM_COLUMNS = ["bin_lower", "bin_upper", "count", "density"] as const;
const EFFICIENCY_COLUMNS = ["n", "mean_alpha", "std_alpha", "realizations"] as const;

interface RawTable {
  header: string[];
  records: number[][];
  meta: Record<string, string>;
}

function parseNumeric(path: string, lineNo: number, field: string): number {
  const value = Number(field);
  if (field.trim() === "" || Number.isNaN(value)) {
    throw new SchemaError(`${path}:${lineNo}: not a number: ${JSON.stringify(field)}`);
  }
  return value;
}

function readTable(path: string, expected: readonly string[]): RawTable {
  const meta: Record<string, string> = {};
  const records: number[][] = [];
  let header: string[] | null = null;
  const lines = readFileSync(path, "utf8").split("\n");
  lines.forEach((raw, idx) => {
    const line = raw.trim();
    if (line === "") return;
    if (line.startsWith("#")) {
      for (const token of line.slice(1).trim().split(/\s+/)) {
        const eq = token.indexOf("=");
        if (eq > 0) meta[token.slice(0, eq)] = token.slice(eq + 1);
      }
      return;
    }
    const fields = line.split(",").map((f) => f.trim());
    if (header === null) {
      header = fields;
      for (const col of expected) {
        if (!header.includes(col)) {
          throw new SchemaError(
            `${path}: missing required column "${col}" (found: ${header.join(", ")})`,
          );
        }
      }
      return;
    }
    if (fields.length !== header.length) {
      throw new SchemaError(
        `${path}:${idx + 1}: expected ${header.length} fields, got ${fields.length}`,
      );
    }
    records.push(fields.map((f) => parseNumeric(path, idx + 1, f)));
  });
  if (header === null) throw new SchemaError(`${path}: no column header found`);
  return { header, records, meta };
}

function column(table: RawTable, name: string): number[] {
  const idx = table.header.indexOf(name);
  return table.records.map((r) => r[idx]);
}

export function readHistogramCsv(path: string): HistogramTable {
  const table = readTable(path, HISTOGRAM_COLUMNS);
  const lower = column(table, "bin_lower");
  const upper = column(table, "bin_upper");
  const count = column(table, "count");
  const density = column(table, "density");
  const rows = lower.map((lo, i) => ({
    binLower: lo,
    binUpper: upper[i],
    count: count[i],
    density: density[i],
  }));
  if (rows.length === 0) throw new SchemaError(`${path}: no data rows`);
  return { rows, meta: table.meta };
}

export function readEfficiencyCsv(path: string): EfficiencyTable {
  const table = readTable(path, EFFICIENCY_COLUMNS);
  const n = column(table, "n");
  const mean = column(table, "mean_alpha");
  const std = column(table, "std_alpha");
  const reals = column(table, "realizations");
  const rows = n.map((size, i) => ({
    n: size,
    meanAlpha: mean[i],
    stdAlpha: std[i],
    realizations: reals[i],
  }));
  if (rows.length === 0) throw new SchemaError(`${path}: no data rows`);
  return { rows, meta: table.meta };
}
