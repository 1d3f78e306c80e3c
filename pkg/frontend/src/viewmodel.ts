/** Pure helpers turning API responses into drawable overlays.
 *
 * Nothing here computes a probability; every number is lifted verbatim from
 * a SimulateResponse or FrameResponse.
 */

import type { SimulateResponse, XY, YZ } from "./types.js";

export interface ShotLine {
  from: XY;
  /** Ground footprint of the goal-plane target: [0, target y]. */
  to: XY;
  target: YZ;
}

/** Red line: ball carrier toward the least-protected target for the actual
 * keeper position. */
export function redLine(response: SimulateResponse, carrier: XY): ShotLine {
  const target = response.actual.least_protected;
  return { from: carrier, to: [0, target[0]], target };
}

/** Green line: same, for the simulated keeper (null without a simulation). */
export function greenLine(response: SimulateResponse, carrier: XY): ShotLine | null {
  if (!response.simulated) {
    return null;
  }
  const target = response.simulated.least_protected;
  return { from: carrier, to: [0, target[0]], target };
}

/** Suggested keeper positions: candidates at least as safe as staying put,
 * best first (the green pins). */
export function suggestedPins(response: SimulateResponse): { position: XY; metric: number }[] {
  const stay = response.suggested.candidates[0];
  return response.suggested.candidates
    .filter((c) => c.metric <= stay.metric)
    .sort((a, b) => a.metric - b.metric)
    .map((c) => ({ position: c.position, metric: c.metric }));
}

/** Heatmap cell geometry: value[r][c] covers y ascending with r (right post
 * to left post), z ascending with c (ground up). */
export interface HeatCell {
  y0: number;
  y1: number;
  z0: number;
  z1: number;
  value: number;
}

export function heatCells(
  heatmap: number[][],
  goalWidth: number,
  goalHeight: number,
): HeatCell[] {
  const rows = heatmap.length;
  const cols = rows > 0 ? heatmap[0].length : 0;
  const dy = goalWidth / rows;
  const dz = goalHeight / cols;
  const half = goalWidth / 2;
  const cells: HeatCell[] = [];
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      cells.push({
        y0: -half + r * dy,
        y1: -half + (r + 1) * dy,
        z0: c * dz,
        z1: (c + 1) * dz,
        value: heatmap[r][c],
      });
    }
  }
  return cells;
}
