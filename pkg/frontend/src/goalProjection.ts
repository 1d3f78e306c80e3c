/** Goal projection panel: the mouth split into cells shaded by conceding
 * probability, with hover readouts. */

import { heatShade } from "./colors.js";
import { heatCells } from "./viewmodel.js";
import type { HeatCell } from "./viewmodel.js";
import type { YZ } from "./types.js";

export class GoalProjection {
  private readonly ctx: CanvasRenderingContext2D;
  private cells: HeatCell[] = [];
  private goalWidth = 7.32;
  private goalHeight = 2.44;
  private targets: YZ[] = [];

  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly hoverLabel: HTMLElement,
  ) {
    const ctx = canvas.getContext("2d");
    if (!ctx) {
      throw new Error("canvas 2d context unavailable");
    }
    this.ctx = ctx;
    canvas.addEventListener("pointermove", (e) => this.onHover(e));
    canvas.addEventListener("pointerleave", () => (this.hoverLabel.textContent = ""));
  }

  render(heatmap: number[][], goalWidth: number, goalHeight: number, targets: YZ[]): void {
    this.goalWidth = goalWidth;
    this.goalHeight = goalHeight;
    this.targets = targets;
    this.cells = heatCells(heatmap, goalWidth, goalHeight);
    const { ctx } = this;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    for (const cell of this.cells) {
      const [x0, y0] = this.toCanvas(cell.y1, cell.z1);
      const [x1, y1] = this.toCanvas(cell.y0, cell.z0);
      ctx.fillStyle = heatShade(cell.value);
      ctx.fillRect(x0, y0, x1 - x0, y1 - y0);
      ctx.strokeStyle = "rgba(255,255,255,0.25)";
      ctx.strokeRect(x0, y0, x1 - x0, y1 - y0);
    }
    // Goal frame and the simulated shot targets.
    ctx.strokeStyle = "#111";
    ctx.lineWidth = 3;
    ctx.strokeRect(0, 0, this.canvas.width, this.canvas.height);
    ctx.fillStyle = "#ff922b";
    for (const [y, z] of this.targets) {
      const [cx, cy] = this.toCanvas(y, z);
      ctx.beginPath();
      ctx.arc(cx, cy, 4, 0, 2 * Math.PI);
      ctx.fill();
    }
  }

  clear(): void {
    this.cells = [];
    this.ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    this.hoverLabel.textContent = "";
  }

  /** Mouth (y, z) to canvas pixels; +y (left post from the keeper's view)
   * drawn on the left, matching a view from inside the pitch. */
  private toCanvas(y: number, z: number): [number, number] {
    const px = ((this.goalWidth / 2 - y) / this.goalWidth) * this.canvas.width;
    const py = (1 - z / this.goalHeight) * this.canvas.height;
    return [px, py];
  }

  private onHover(e: PointerEvent): void {
    if (!this.cells.length) {
      return;
    }
    const rect = this.canvas.getBoundingClientRect();
    const px = ((e.clientX - rect.left) / rect.width) * this.canvas.width;
    const py = ((e.clientY - rect.top) / rect.height) * this.canvas.height;
    const y = this.goalWidth / 2 - (px / this.canvas.width) * this.goalWidth;
    const z = (1 - py / this.canvas.height) * this.goalHeight;
    const cell = this.cells.find(
      (c) => y >= c.y0 && y <= c.y1 && z >= c.z0 && z <= c.z1,
    );
    this.hoverLabel.textContent = cell
      ? `cell y ${cell.y0.toFixed(2)}..${cell.y1.toFixed(2)} m, z ${cell.z0.toFixed(2)}..${cell.z1.toFixed(2)} m — P(goal) ${cell.value.toFixed(3)}`
      : "";
  }
}
