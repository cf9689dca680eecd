/** Deterministic software rasterizer: RGBA buffer with the primitives the
 * panels need (rects, lines, filled circles, bitmap text). No anti-aliasing,
 * so output bytes depend only on the drawing calls. */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from "./font.js";

export type Color = readonly [number, number, number];

export const BLACK: Color = [0, 0, 0];
export const GREY: Color = [150, 150, 150];
export const LIGHT_GREY: Color = [220, 220, 220];
export const BLUE: Color = [31, 119, 180];
export const RED: Color = [214, 39, 40];
export const GREEN: Color = [44, 160, 44];
export const PURPLE: Color = [148, 103, 189];
export const ORANGE: Color = [255, 127, 14];

export class Surface {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 4).fill(255);
  }

  set(x: number, y: number, color: Color): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.pixels[i] = color[0];
    this.pixels[i + 1] = color[1];
    this.pixels[i + 2] = color[2];
    this.pixels[i + 3] = 255;
  }

  get(x: number, y: number): Color {
    const i = (y * this.width + x) * 4;
    return [this.pixels[i], this.pixels[i + 1], this.pixels[i + 2]];
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: Color): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) this.set(x, y, color);
    }
  }

  strokeRect(x0: number, y0: number, w: number, h: number, color: Color): void {
    this.line(x0, y0, x0 + w - 1, y0, color);
    this.line(x0, y0 + h - 1, x0 + w - 1, y0 + h - 1, color);
    this.line(x0, y0, x0, y0 + h - 1, color);
    this.line(x0 + w - 1, y0, x0 + w - 1, y0 + h - 1, color);
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Color): void {
    // Bresenham on rounded endpoints
    let x = Math.round(x0);
    let y = Math.round(y0);
    const xe = Math.round(x1);
    const ye = Math.round(y1);
    const dx = Math.abs(xe - x);
    const dy = -Math.abs(ye - y);
    const sx = x < xe ? 1 : -1;
    const sy = y < ye ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(x, y, color);
      if (x === xe && y === ye) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  polyline(points: Array<readonly [number, number]>, color: Color): void {
    for (let i = 1; i < points.length; i++) {
      const [ax, ay] = points[i - 1];
      const [bx, by] = points[i];
      if (![ax, ay, bx, by].every(Number.isFinite)) continue;
      this.line(ax, ay, bx, by, color);
    }
  }

  fillCircle(cx: number, cy: number, r: number, color: Color): void {
    const x0 = Math.round(cx);
    const y0 = Math.round(cy);
    for (let dy = -r; dy <= r; dy++) {
      for (let dx = -r; dx <= r; dx++) {
        if (dx * dx + dy * dy <= r * r) this.set(x0 + dx, y0 + dy, color);
      }
    }
  }

  text(x: number, y: number, content: string, color: Color, scale = 2): void {
    let cursor = Math.round(x);
    const top = Math.round(y);
    for (const ch of content) {
      const glyph = glyphFor(ch);
      for (let row = 0; row < GLYPH_HEIGHT; row++) {
        for (let col = 0; col < GLYPH_WIDTH; col++) {
          if (glyph[row][col] === "1") {
            this.fillRect(cursor + col * scale, top + row * scale, scale, scale, color);
          }
        }
      }
      cursor += (GLYPH_WIDTH + 1) * scale;
    }
  }
}

export function textWidth(content: string, scale = 2): number {
  return content.length * (GLYPH_WIDTH + 1) * scale;
}

export const TEXT_HEIGHT = (scale = 2): number => GLYPH_HEIGHT * scale;
