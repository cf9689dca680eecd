/**
 * Average-clustering trend panels from a sweep summary CSV: error-bar series
 * against network size on a log x axis, plus degree-0/1 fraction panels
 * comparing the empirical series with the closed-form approximation.
 */

import { column, hasColumn, Table } from "./csv.js";
import { drawErrorBar, drawFrame, drawLegend, drawXLabel, plotArea, PanelGeom } from "./panel.js";
import { BLUE, Color, GREEN, ORANGE, PURPLE, RED, Surface } from "./raster.js";
import { linearScale, linearTicks, logScale, logTicks } from "./scales.js";

const PANEL_W = 560;
const PANEL_H = 380;

export interface SeriesSpec {
  meanColumn: string;
  stdColumn: string;
  label: string;
  color: Color;
}

export interface PanelResult {
  surface: Surface;
  skipped: boolean;
  warnings: string[];
}

export function renderErrorBarPanel(
  table: Table,
  series: SeriesSpec[],
  title: string,
  yDomain?: readonly [number, number],
  requireAll = false,
): PanelResult {
  const warnings: string[] = [];
  const available = series.filter((s) => {
    const ok = hasColumn(table, s.meanColumn) && hasColumn(table, s.stdColumn);
    if (!ok) warnings.push(`column ${s.meanColumn}/${s.stdColumn} missing: series omitted`);
    return ok;
  });
  if (available.length === 0 || (requireAll && available.length < series.length)) {
    return { surface: new Surface(1, 1), skipped: true, warnings };
  }
  const sizes = column(table, "n");
  const geom: PanelGeom = { x0: 0, y0: 0, width: PANEL_W, height: PANEL_H };
  const surface = new Surface(PANEL_W, PANEL_H);
  const area = plotArea(geom);

  let yMax = 0;
  for (const s of available) {
    const means = column(table, s.meanColumn);
    const stds = column(table, s.stdColumn);
    for (let i = 0; i < means.length; i++) yMax = Math.max(yMax, means[i] + stds[i]);
  }
  const domain = yDomain ?? [0, Math.max(yMax * 1.15, 0.05)];
  const xScale = logScale(
    [Math.min(...sizes) / 1.5, Math.max(...sizes) * 1.5],
    [area.x0, area.x0 + area.width],
  );
  const yScale = linearScale(domain, [area.y0 + area.height, area.y0]);
  drawFrame(
    surface,
    area,
    xScale,
    yScale,
    logTicks(Math.min(...sizes), Math.max(...sizes)),
    linearTicks(domain[0], domain[1], 4),
    title,
  );
  drawXLabel(surface, area, "n");

  for (const s of available) {
    const means = column(table, s.meanColumn);
    const stds = column(table, s.stdColumn);
    const line = sizes.map(
      (n, i) => [xScale.toPx(n), yScale.toPx(means[i])] as const,
    );
    surface.polyline(line, s.color);
    for (let i = 0; i < sizes.length; i++) {
      drawErrorBar(surface, Math.round(xScale.toPx(sizes[i])), yScale, means[i], stds[i], s.color);
    }
  }
  drawLegend(surface, area, available.map((s) => ({ label: s.label, color: s.color })));
  return { surface, skipped: false, warnings };
}

export const AVG_SERIES: SeriesSpec[] = [
  { meanColumn: "c_excl_mean", stdColumn: "c_excl_std", label: "c excl", color: PURPLE },
  { meanColumn: "c_incl_mean", stdColumn: "c_incl_std", label: "c incl", color: BLUE },
  {
    meanColumn: "one_minus_r01_emp_mean",
    stdColumn: "one_minus_r01_emp_std",
    label: "1 - r01 emp",
    color: GREEN,
  },
];

export const R0_SERIES: SeriesSpec[] = [
  { meanColumn: "r0_emp_mean", stdColumn: "r0_emp_std", label: "r0 emp", color: BLUE },
  { meanColumn: "r0_approx_mean", stdColumn: "r0_approx_std", label: "r0 approx", color: ORANGE },
];

export const R1_SERIES: SeriesSpec[] = [
  { meanColumn: "r1_emp_mean", stdColumn: "r1_emp_std", label: "r1 emp", color: RED },
  { meanColumn: "r1_approx_mean", stdColumn: "r1_approx_std", label: "r1 approx", color: ORANGE },
];

export interface AvgPanelsOutput {
  name: string;
  result: PanelResult;
}

export function renderAvgPanels(table: Table): AvgPanelsOutput[] {
  // the approximation panels are skipped (with a warning) when their columns
  // are absent; the headline panel requires its columns and fails otherwise
  for (const s of AVG_SERIES) {
    column(table, s.meanColumn);
    column(table, s.stdColumn);
  }
  return [
    {
      name: "avg_clustering",
      result: renderErrorBarPanel(table, AVG_SERIES, "average clustering", [0, 1.05]),
    },
    {
      name: "r0_panel",
      result: renderErrorBarPanel(table, R0_SERIES, "degree 0 fraction", undefined, true),
    },
    {
      name: "r1_panel",
      result: renderErrorBarPanel(table, R1_SERIES, "degree 1 fraction", undefined, true),
    },
  ];
}
