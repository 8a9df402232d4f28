// Fixed-size history of per-frame gain telemetry for the strip chart.

import { TelemetryMessage } from "./protocol.js";

export interface TelemetryPoint {
  frame: number;
  meanGk: number;
  meanGcoh: number;
  weight: number;
  vad: boolean;
}

export class TelemetryHistory {
  private points: TelemetryPoint[] = [];

  constructor(readonly capacity = 300) {
    if (capacity < 1) throw new Error("capacity must be >= 1");
  }

  push(msg: TelemetryMessage): void {
    this.points.push({
      frame: msg.frame,
      meanGk: msg.mean_gk,
      meanGcoh: msg.mean_gcoh,
      weight: msg.weight,
      vad: msg.vad,
    });
    if (this.points.length > this.capacity) {
      this.points.splice(0, this.points.length - this.capacity);
    }
  }

  latest(): TelemetryPoint | null {
    return this.points.length ? this.points[this.points.length - 1] : null;
  }

  snapshot(): readonly TelemetryPoint[] {
    return this.points;
  }

  /** Mean applied gain trace: weight*Gk + (1-weight)*Gcoh per frame. */
  appliedGainTrace(): number[] {
    return this.points.map(
      (p) => p.weight * p.meanGk + (1 - p.weight) * p.meanGcoh,
    );
  }
}

export function drawStrip(
  canvas: HTMLCanvasElement,
  history: TelemetryHistory,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const { width, height } = canvas;
  ctx.clearRect(0, 0, width, height);
  const pts = history.snapshot();
  if (pts.length < 2) return;
  const x = (i: number) => (i / (history.capacity - 1)) * width;
  const y = (v: number) => height - v * height;

  const trace = (pick: (p: TelemetryPoint) => number, style: string) => {
    ctx.strokeStyle = style;
    ctx.beginPath();
    pts.forEach((p, i) => {
      if (i === 0) ctx.moveTo(x(i), y(pick(p)));
      else ctx.lineTo(x(i), y(pick(p)));
    });
    ctx.stroke();
  };

  // VAD background
  ctx.fillStyle = "rgba(120, 200, 120, 0.15)";
  pts.forEach((p, i) => {
    if (p.vad) ctx.fillRect(x(i), 0, width / history.capacity + 1, height);
  });
  trace((p) => p.meanGk, "#d9822b");
  trace((p) => p.meanGcoh, "#2b7bd9");
  trace((p) => p.weight * p.meanGk + (1 - p.weight) * p.meanGcoh, "#222");
}
