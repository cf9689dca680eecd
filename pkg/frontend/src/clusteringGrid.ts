/**
 * Clustering-function grid: one panel per (n, alpha) cell, empirical points
 * as markers over the two theory curves, reduced degree on a log x axis.
 * The renderer projects CSV values onto pixels and computes nothing else.
 */

import * as path from "node:path";

import { checkSidecar, column, listCsvFiles, readCsv, Table } from "./csv.js";
import { drawFrame, drawLegend, drawXLabel, plotArea, PanelGeom } from "./panel.js";
import { BLUE, GREEN, GREY, RED, Surface } from "./raster.js";
import { linearScale, linearTicks, logScale, logTicks } from "./scales.js";

export interface CellData {
  alpha: number;
  n: number;
  points: Array<{ a: number; c: number }>;
  curveA: number[];
  curveC: number[];
  curveHub: number[];
  warnings: string[];
}

function tagToNumber(tag: string): number {
  return Number(tag.replace("p", "."));
}

function cellParams(file: string, kind: "profile" | "curve"): { alpha: number; n: number } {
  const sidecar = checkSidecar(file);
  const params = sidecar?.params as { alpha?: number; n?: number } | undefined;
  if (params && typeof params.alpha === "number" && typeof params.n === "number") {
    return { alpha: params.alpha, n: params.n };
  }
  const pattern =
    kind === "profile" ? /profile_alpha([0-9p.]+)_n(\d+)/ : /curve_alpha([0-9p.]+)_n(\d+)/;
  const match = path.basename(file).match(pattern);
  if (!match) throw new Error(`cannot determine (alpha, n) for ${file}`);
  return { alpha: tagToNumber(match[1]), n: Number(match[2]) };
}

export function collectCells(inDir: string): CellData[] {
  const cells = new Map<string, CellData>();
  const cell = (alpha: number, n: number): CellData => {
    const key = `${alpha}|${n}`;
    let c = cells.get(key);
    if (!c) {
      c = { alpha, n, points: [], curveA: [], curveC: [], curveHub: [], warnings: [] };
      cells.set(key, c);
    }
    return c;
  };

  for (const file of listCsvFiles(inDir, "profile_")) {
    const { alpha, n } = cellParams(file, "profile");
    const table = readCsv(file);
    const a = column(table, "a");
    const c = column(table, "C_k");
    column(table, "k");
    column(table, "N_k");
    const target = cell(alpha, n);
    for (let i = 0; i < a.length; i++) target.points.push({ a: a[i], c: c[i] });
    if (a.length === 0) target.warnings.push("no empirical points");
  }
  for (const file of listCsvFiles(inDir, "curve_")) {
    const { alpha, n } = cellParams(file, "curve");
    const table = readCsv(file);
    const target = cell(alpha, n);
    target.curveA = column(table, "a");
    target.curveC = column(table, "c_bar");
    target.curveHub = column(table, "c_hub");
  }
  if (cells.size === 0) {
    throw new Error(`no profile/curve CSVs found under ${inDir}`);
  }
  return [...cells.values()];
}

const PANEL_W = 440;
const PANEL_H = 300;

function renderCell(surface: Surface, geom: PanelGeom, cell: CellData): void {
  const area = plotArea(geom);
  const positives = [
    ...cell.points.map((p) => p.a),
    ...cell.curveA,
  ].filter((v) => Number.isFinite(v) && v > 0);
  const xMin = positives.length ? Math.min(...positives) : 0.01;
  const xMax = positives.length ? Math.max(...positives) : 10;
  const xScale = logScale(
    [xMin / 1.2, xMax * 1.2],
    [area.x0, area.x0 + area.width],
  );
  const yScale = linearScale([0, 1.05], [area.y0 + area.height, area.y0]);
  drawFrame(
    surface,
    area,
    xScale,
    yScale,
    logTicks(xMin / 1.2, xMax * 1.2),
    linearTicks(0, 1.0, 3),
    `n=${cell.n} alpha=${cell.alpha}`,
  );
  drawXLabel(surface, area, "reduced degree a");

  const curvePoints = cell.curveA.map(
    (a, i) => [xScale.toPx(a), yScale.toPx(cell.curveC[i])] as const,
  );
  surface.polyline(curvePoints, RED);
  const hubPoints = cell.curveA.map(
    (a, i) =>
      [
        xScale.toPx(a),
        Number.isFinite(cell.curveHub[i]) && cell.curveHub[i] <= 1.05
          ? yScale.toPx(cell.curveHub[i])
          : Number.NaN,
      ] as const,
  );
  surface.polyline(hubPoints, GREEN);
  for (const point of cell.points) {
    surface.fillCircle(Math.round(xScale.toPx(point.a)), Math.round(yScale.toPx(point.c)), 3, BLUE);
  }
  for (const [i, warning] of cell.warnings.entries()) {
    surface.text(area.x0 + 8, area.y0 + 8 + i * 18, warning, GREY, 2);
  }
  drawLegend(surface, area, [
    { label: "C(k)", color: BLUE },
    { label: "annealed", color: RED },
    { label: "hub", color: GREEN },
  ]);
}

export function renderClusteringGrid(inDir: string, dpi = 200): {
  surface: Surface;
  cells: CellData[];
  columns: number;
  rows: number;
} {
  const cells = collectCells(inDir);
  const alphas = [...new Set(cells.map((c) => c.alpha))].sort((a, b) => a - b);
  const sizes = [...new Set(cells.map((c) => c.n))].sort((a, b) => a - b);
  const columns = alphas.length;
  const rows = sizes.length;
  const surface = new Surface(columns * PANEL_W, rows * PANEL_H);
  for (const cell of cells) {
    const col = alphas.indexOf(cell.alpha);
    const row = sizes.indexOf(cell.n);
    renderCell(
      surface,
      { x0: col * PANEL_W, y0: row * PANEL_H, width: PANEL_W, height: PANEL_H },
      cell,
    );
  }
  void dpi;
  return { surface, cells, columns, rows };
}

export function cellPixel(
  cell: { points: Array<{ a: number; c: number }>; curveA: number[] },
  geomIndex: { col: number; row: number },
  point: { a: number; c: number },
): { x: number; y: number } {
  // mirror of renderCell's coordinate math, exposed for round-trip tests
  const geom = {
    x0: geomIndex.col * PANEL_W,
    y0: geomIndex.row * PANEL_H,
    width: PANEL_W,
    height: PANEL_H,
  };
  const area = plotArea(geom);
  const positives = [...cell.points.map((p) => p.a), ...cell.curveA].filter(
    (v) => Number.isFinite(v) && v > 0,
  );
  const xMin = positives.length ? Math.min(...positives) : 0.01;
  const xMax = positives.length ? Math.max(...positives) : 10;
  const xScale = logScale([xMin / 1.2, xMax * 1.2], [area.x0, area.x0 + area.width]);
  const yScale = linearScale([0, 1.05], [area.y0 + area.height, area.y0]);
  return { x: Math.round(xScale.toPx(point.a)), y: Math.round(yScale.toPx(point.c)) };
}
