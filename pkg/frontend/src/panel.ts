/** Shared panel scaffolding: frame, ticks, labels, legends, error bars. */

import {
  BLACK,
  Color,
  GREY,
  LIGHT_GREY,
  Surface,
  TEXT_HEIGHT,
  textWidth,
} from "./raster.js";
import { Scale, formatTick } from "./scales.js";

export interface PanelGeom {
  x0: number;
  y0: number;
  width: number;
  height: number;
}

export function plotArea(geom: PanelGeom): PanelGeom {
  // margins for tick labels and the title line
  const left = 46;
  const right = 8;
  const top = 20;
  const bottom = 30;
  return {
    x0: geom.x0 + left,
    y0: geom.y0 + top,
    width: geom.width - left - right,
    height: geom.height - top - bottom,
  };
}

export function drawFrame(
  surface: Surface,
  area: PanelGeom,
  xScale: Scale,
  yScale: Scale,
  xTicks: number[],
  yTicks: number[],
  title: string,
): void {
  surface.strokeRect(area.x0, area.y0, area.width, area.height, BLACK);
  surface.text(area.x0, area.y0 - TEXT_HEIGHT(2) - 2, title, BLACK, 2);
  for (const t of xTicks) {
    const px = Math.round(xScale.toPx(t));
    if (px < area.x0 || px > area.x0 + area.width) continue;
    surface.line(px, area.y0 + 1, px, area.y0 + area.height - 2, LIGHT_GREY);
    surface.line(px, area.y0 + area.height - 1, px, area.y0 + area.height + 3, BLACK);
    const label = formatTick(t);
    surface.text(px - textWidth(label, 2) / 2, area.y0 + area.height + 6, label, BLACK, 2);
  }
  for (const t of yTicks) {
    const py = Math.round(yScale.toPx(t));
    if (py < area.y0 || py > area.y0 + area.height) continue;
    surface.line(area.x0 + 1, py, area.x0 + area.width - 2, py, LIGHT_GREY);
    surface.line(area.x0 - 4, py, area.x0 - 1, py, BLACK);
    const label = formatTick(t);
    surface.text(area.x0 - 6 - textWidth(label, 2), py - TEXT_HEIGHT(2) / 2, label, BLACK, 2);
  }
}

export function drawXLabel(surface: Surface, area: PanelGeom, label: string): void {
  surface.text(
    area.x0 + area.width / 2 - textWidth(label, 2) / 2,
    area.y0 + area.height + 6 + TEXT_HEIGHT(2) + 2,
    label,
    GREY,
    2,
  );
}

export interface LegendEntry {
  label: string;
  color: Color;
}

export function drawLegend(surface: Surface, area: PanelGeom, entries: LegendEntry[]): void {
  const line = TEXT_HEIGHT(2) + 4;
  const width = Math.max(...entries.map((e) => textWidth(e.label, 2))) + 22;
  const x = area.x0 + area.width - width - 4;
  let y = area.y0 + 4;
  for (const entry of entries) {
    surface.fillRect(x, y + 3, 12, 6, entry.color);
    surface.text(x + 16, y, entry.label, BLACK, 2);
    y += line;
  }
}

export function drawErrorBar(
  surface: Surface,
  px: number,
  yScale: Scale,
  mean: number,
  std: number,
  color: Color,
): void {
  const yLo = Math.round(yScale.toPx(mean - std));
  const yHi = Math.round(yScale.toPx(mean + std));
  surface.line(px, yLo, px, yHi, color);
  surface.line(px - 3, yLo, px + 3, yLo, color);
  surface.line(px - 3, yHi, px + 3, yHi, color);
  surface.fillCircle(px, Math.round(yScale.toPx(mean)), 3, color);
}
