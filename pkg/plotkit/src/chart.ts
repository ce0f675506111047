import { readFileSync } from "fs";

import { parseCsv } from "./csv";
import { EmptyInputError, MissingColumnError } from "./errors";

export type YColumn = "c_l1" | "c_re";
export type GroupColumn = "omega" | "drive" | "none";

export interface FigureSpec {
  inputCsv: string;
  yColumn: YColumn;
  groupColumn: GroupColumn;
  title: string;
  xLabel: string;
  yLabel: string;
  outputImage: string;
}

export interface Series {
  key: string;
  label: string;
  color: string;
  points: Array<[number, number]>;
}

/** Drive-kind colors: green/blue/red for none/real/imaginary. */
const DRIVE_COLORS: Record<string, string> = {
  none: "#2ca02c",
  real: "#1f77b4",
  imaginary: "#d62728",
};

/** Palette for coupling-sweep series, in sweep order. */
const SWEEP_PALETTE = ["#9467bd", "#1f77b4", "#2ca02c", "#ff7f0e", "#d62728"];

function seriesColor(group: GroupColumn, key: string, index: number): string {
  if (group === "drive") {
    return DRIVE_COLORS[key] ?? "#555555";
  }
  return SWEEP_PALETTE[index % SWEEP_PALETTE.length];
}

function seriesLabel(group: GroupColumn, key: string): string {
  if (group === "omega") {
    return `Ω/γ₀ = ${Number(key).toFixed(2)}`;
  }
  if (group === "drive") {
    return key;
  }
  return "series";
}

/**
 * Read the CSV behind a figure spec and split it into plottable series,
 * one per distinct value of the group column (a single anonymous series
 * when grouping is "none").  Throws MissingColumnError for absent
 * columns and EmptyInputError when any series has fewer than two rows.
 */
export function extractSeries(spec: FigureSpec): Series[] {
  let text: string;
  try {
    text = readFileSync(spec.inputCsv, "utf-8");
  } catch {
    throw new EmptyInputError(`cannot read ${spec.inputCsv}`);
  }
  const { header, rows } = parseCsv(text);
  if (header.length === 0 || rows.length === 0) {
    throw new EmptyInputError(`${spec.inputCsv} has no data rows`);
  }

  const tIndex = header.indexOf("t");
  if (tIndex < 0) {
    throw new MissingColumnError("t", spec.inputCsv);
  }
  const yIndex = header.indexOf(spec.yColumn);
  if (yIndex < 0) {
    throw new MissingColumnError(spec.yColumn, spec.inputCsv);
  }
  let groupIndex = -1;
  if (spec.groupColumn !== "none") {
    groupIndex = header.indexOf(spec.groupColumn);
    if (groupIndex < 0) {
      throw new MissingColumnError(spec.groupColumn, spec.inputCsv);
    }
  }

  const order: string[] = [];
  const byKey = new Map<string, Array<[number, number]>>();
  for (const row of rows) {
    const key = groupIndex >= 0 ? row[groupIndex] : "all";
    let points = byKey.get(key);
    if (points === undefined) {
      points = [];
      byKey.set(key, points);
      order.push(key);
    }
    points.push([Number(row[tIndex]), Number(row[yIndex])]);
  }

  const series = order.map((key, index) => ({
    key,
    label: seriesLabel(spec.groupColumn, key),
    color: seriesColor(spec.groupColumn, key, index),
    points: byKey.get(key)!,
  }));
  for (const s of series) {
    if (s.points.length < 2) {
      throw new EmptyInputError(
        `${spec.inputCsv}: series "${s.key}" has ${s.points.length} row(s), need at least 2`,
      );
    }
    for (const [x, y] of s.points) {
      if (!Number.isFinite(x) || !Number.isFinite(y)) {
        throw new EmptyInputError(`${spec.inputCsv}: non-numeric data in series "${s.key}"`);
      }
    }
  }
  return series;
}
