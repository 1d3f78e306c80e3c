/** Interactive field view: pins, shot lines, drag-to-simulate. */

import { PIN_COLORS } from "./colors.js";
import { greenLine, redLine, suggestedPins } from "./viewmodel.js";
import { canvasToPitch, defaultViewport, pitchToCanvas, withinPitch } from "./transform.js";
import type { FieldViewport } from "./transform.js";
import type { FreezeFrame, SimulateResponse, XY } from "./types.js";

const PIN_RADIUS_PX = 9;

export type PinId =
  | { kind: "goalkeeper" }
  | { kind: "simulated_goalkeeper" }
  | { kind: "defender"; index: number }
  | { kind: "attacker"; index: number };

export interface FieldCallbacks {
  /** Fired on every drag sample with the pin's new pitch position. */
  onDrag(pin: PinId, position: XY): void;
  /** Fired when a drag ends outside the pitch; the view already snapped back. */
  onInvalidDrop(pin: PinId): void;
}

export interface FieldSceneInput {
  frame: FreezeFrame;
  simulatedGoalkeeper: XY | null;
  response: SimulateResponse | null;
  pitchLength: number;
  pitchWidth: number;
  goalWidth: number;
}

export class FieldView {
  private readonly ctx: CanvasRenderingContext2D;
  private readonly view: FieldViewport;
  private scene: FieldSceneInput | null = null;
  private drag: { pin: PinId; start: XY } | null = null;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly callbacks: FieldCallbacks,
  ) {
    const ctx = canvas.getContext("2d");
    if (!ctx) {
      throw new Error("canvas 2d context unavailable");
    }
    this.ctx = ctx;
    this.view = defaultViewport(canvas.width, canvas.height);
    canvas.addEventListener("pointerdown", (e) => this.onPointerDown(e));
    canvas.addEventListener("pointermove", (e) => this.onPointerMove(e));
    canvas.addEventListener("pointerup", (e) => this.onPointerUp(e));
    canvas.addEventListener("pointercancel", () => (this.drag = null));
  }

  render(scene: FieldSceneInput): void {
    this.scene = scene;
    const { ctx } = this;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    this.drawPitch(scene);
    this.drawLines(scene);
    this.drawPins(scene);
  }

  // -- drawing -----------------------------------------------------------

  private drawPitch(scene: FieldSceneInput): void {
    const { ctx, view } = this;
    ctx.fillStyle = "#3a7d44";
    ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);
    ctx.strokeStyle = "rgba(255,255,255,0.85)";
    ctx.lineWidth = 2;
    // Goal line and the goal mouth.
    const [gx0, gy0] = pitchToCanvas([0, scene.pitchWidth / 2], view);
    const [, gy1] = pitchToCanvas([0, -scene.pitchWidth / 2], view);
    ctx.beginPath();
    ctx.moveTo(gx0, gy0);
    ctx.lineTo(gx0, gy1);
    ctx.stroke();
    const [, postTop] = pitchToCanvas([0, scene.goalWidth / 2], view);
    const [, postBottom] = pitchToCanvas([0, -scene.goalWidth / 2], view);
    ctx.lineWidth = 6;
    ctx.strokeStyle = "#ffffff";
    ctx.beginPath();
    ctx.moveTo(gx0 - 2, postTop);
    ctx.lineTo(gx0 - 2, postBottom);
    ctx.stroke();
    // Penalty area (16.5 m deep, 40.32 m wide) and six-yard box.
    ctx.lineWidth = 1.5;
    ctx.strokeStyle = "rgba(255,255,255,0.7)";
    for (const [depth, width] of [
      [16.5, 40.32],
      [5.5, 18.32],
    ] as const) {
      const [x0, y0] = pitchToCanvas([0, width / 2], this.view);
      const [x1, y1] = pitchToCanvas([depth, -width / 2], this.view);
      ctx.strokeRect(x0, y0, x1 - x0, y1 - y0);
    }
    // Eligibility zone boundary (30% of the pitch).
    const [zx] = pitchToCanvas([0.3 * scene.pitchLength, 0], view);
    ctx.setLineDash([6, 6]);
    ctx.strokeStyle = "rgba(255,255,255,0.4)";
    ctx.beginPath();
    ctx.moveTo(zx, 0);
    ctx.lineTo(zx, this.canvas.height);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  private drawLines(scene: FieldSceneInput): void {
    const response = scene.response;
    const carrier = this.carrierPosition(scene);
    if (!response || !carrier) {
      return;
    }
    this.drawShotLine(redLine(response, carrier).to, carrier, "#e03131");
    const green = greenLine(response, carrier);
    if (green) {
      this.drawShotLine(green.to, carrier, "#2f9e44");
    }
  }

  private drawShotLine(to: XY, from: XY, color: string): void {
    const { ctx, view } = this;
    const [x0, y0] = pitchToCanvas(from, view);
    const [x1, y1] = pitchToCanvas(to, view);
    ctx.strokeStyle = color;
    ctx.lineWidth = 2.5;
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
    ctx.fillStyle = color;
    ctx.beginPath();
    ctx.arc(x1, y1, 4, 0, 2 * Math.PI);
    ctx.fill();
  }

  private drawPins(scene: FieldSceneInput): void {
    if (scene.response) {
      for (const pin of suggestedPins(scene.response)) {
        this.drawPin(pin.position, PIN_COLORS.suggestion, null, 6);
      }
    }
    scene.frame.defenders.forEach((p) => this.drawPin(p, PIN_COLORS.defender, "#333"));
    scene.frame.attackers.forEach((p, i) => {
      const isCarrier = i === scene.frame.ball_carrier;
      this.drawPin(p, PIN_COLORS.attacker, isCarrier ? PIN_COLORS.carrierBorder : null,
                   PIN_RADIUS_PX, isCarrier ? 3.5 : 1);
    });
    if (scene.frame.goalkeeper) {
      this.drawPin(scene.frame.goalkeeper, PIN_COLORS.goalkeeper, "#fff");
    }
    if (scene.simulatedGoalkeeper) {
      this.drawPin(scene.simulatedGoalkeeper, PIN_COLORS.simulatedGoalkeeper, "#fff");
    }
  }

  private drawPin(p: XY, fill: string, border: string | null,
                  radius = PIN_RADIUS_PX, borderWidth = 1.5): void {
    const { ctx } = this;
    const [x, y] = pitchToCanvas(p, this.view);
    ctx.beginPath();
    ctx.arc(x, y, radius, 0, 2 * Math.PI);
    ctx.fillStyle = fill;
    ctx.fill();
    if (border) {
      ctx.lineWidth = borderWidth;
      ctx.strokeStyle = border;
      ctx.stroke();
    }
  }

  // -- dragging ----------------------------------------------------------

  private carrierPosition(scene: FieldSceneInput): XY | null {
    const idx = scene.frame.ball_carrier;
    return idx === null ? null : scene.frame.attackers[idx] ?? null;
  }

  private canvasPoint(e: PointerEvent): XY {
    const rect = this.canvas.getBoundingClientRect();
    return [
      ((e.clientX - rect.left) / rect.width) * this.canvas.width,
      ((e.clientY - rect.top) / rect.height) * this.canvas.height,
    ];
  }

  private hitTest(px: XY): { pin: PinId; at: XY } | null {
    const scene = this.scene;
    if (!scene) {
      return null;
    }
    const candidates: { pin: PinId; at: XY }[] = [];
    if (scene.simulatedGoalkeeper) {
      candidates.push({ pin: { kind: "simulated_goalkeeper" }, at: scene.simulatedGoalkeeper });
    }
    if (scene.frame.goalkeeper) {
      candidates.push({ pin: { kind: "goalkeeper" }, at: scene.frame.goalkeeper });
    }
    scene.frame.attackers.forEach((p, index) =>
      candidates.push({ pin: { kind: "attacker", index }, at: p }),
    );
    scene.frame.defenders.forEach((p, index) =>
      candidates.push({ pin: { kind: "defender", index }, at: p }),
    );
    for (const candidate of candidates) {
      const [cx, cy] = pitchToCanvas(candidate.at, this.view);
      const dist = Math.hypot(cx - px[0], cy - px[1]);
      if (dist <= PIN_RADIUS_PX + 4) {
        return candidate;
      }
    }
    return null;
  }

  private onPointerDown(e: PointerEvent): void {
    const hit = this.hitTest(this.canvasPoint(e));
    if (hit) {
      this.drag = { pin: hit.pin, start: hit.at };
      this.canvas.setPointerCapture(e.pointerId);
    }
  }

  private onPointerMove(e: PointerEvent): void {
    if (!this.drag) {
      return;
    }
    const position = canvasToPitch(this.canvasPoint(e), this.view);
    this.callbacks.onDrag(this.drag.pin, position);
  }

  private onPointerUp(e: PointerEvent): void {
    const drag = this.drag;
    this.drag = null;
    if (!drag || !this.scene) {
      return;
    }
    const dropped = canvasToPitch(this.canvasPoint(e), this.view);
    if (!withinPitch(dropped, this.scene.pitchLength, this.scene.pitchWidth)) {
      // Snap back to where the drag started and tell the app.
      this.callbacks.onDrag(drag.pin, drag.start);
      this.callbacks.onInvalidDrop(drag.pin);
    }
  }
}
