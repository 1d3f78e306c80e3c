/** Pitch-meter <-> canvas-pixel mapping for the field view.
 *
 * The defended goal sits at the left edge (x = 0); x grows rightward into
 * the pitch and y grows downward on screen (so +y, the left post side, is at
 * the top when looking at the goal from the pitch).
 */

import type { XY } from "./types.js";

export interface FieldViewport {
  /** Visible pitch window in meters. */
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
  widthPx: number;
  heightPx: number;
}

export function defaultViewport(widthPx: number, heightPx: number): FieldViewport {
  return { xMin: -3, xMax: 42, yMin: -24, yMax: 24, widthPx, heightPx };
}

export function pitchToCanvas(p: XY, view: FieldViewport): XY {
  const sx = view.widthPx / (view.xMax - view.xMin);
  const sy = view.heightPx / (view.yMax - view.yMin);
  return [(p[0] - view.xMin) * sx, (view.yMax - p[1]) * sy];
}

export function canvasToPitch(px: XY, view: FieldViewport): XY {
  const sx = (view.xMax - view.xMin) / view.widthPx;
  const sy = (view.yMax - view.yMin) / view.heightPx;
  return [view.xMin + px[0] * sx, view.yMax - px[1] * sy];
}

export function withinPitch(p: XY, pitchLength: number, pitchWidth: number): boolean {
  return p[0] >= 0 && p[0] <= pitchLength && Math.abs(p[1]) <= pitchWidth / 2;
}
