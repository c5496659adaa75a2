/** Canvas scatter rendering shared by the decision graph and the point
 * cloud. Pure draw + hit-test helpers; no state of its own. */

export interface ScatterPoint {
  x: number;
  y: number;
  /** palette slot; -1 draws the neutral color */
  color: number;
  highlighted?: boolean;
}

export interface Transform {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
  width: number;
  height: number;
  margin: number;
}

const PALETTE = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

export function colorFor(slot: number): string {
  return slot < 0 ? "#999999" : PALETTE[slot % PALETTE.length];
}

export function fitTransform(
  xs: number[], ys: number[], width: number, height: number, margin = 30,
): Transform {
  const pad = (lo: number, hi: number): [number, number] => {
    if (hi === lo) {
      return [lo - 1, hi + 1];
    }
    const p = (hi - lo) * 0.05;
    return [lo - p, hi + p];
  };
  const [xMin, xMax] = pad(Math.min(...xs), Math.max(...xs));
  const [yMin, yMax] = pad(Math.min(...ys), Math.max(...ys));
  return { xMin, xMax, yMin, yMax, width, height, margin };
}

export function toScreen(t: Transform, x: number, y: number): [number, number] {
  const w = t.width - 2 * t.margin;
  const h = t.height - 2 * t.margin;
  const sx = t.margin + ((x - t.xMin) / (t.xMax - t.xMin)) * w;
  // y axis points up
  const sy = t.margin + (1 - (y - t.yMin) / (t.yMax - t.yMin)) * h;
  return [sx, sy];
}

export function toData(t: Transform, sx: number, sy: number): [number, number] {
  const w = t.width - 2 * t.margin;
  const h = t.height - 2 * t.margin;
  const x = t.xMin + ((sx - t.margin) / w) * (t.xMax - t.xMin);
  const y = t.yMin + (1 - (sy - t.margin) / h) * (t.yMax - t.yMin);
  return [x, y];
}

export function draw(
  ctx: CanvasRenderingContext2D, t: Transform, pts: ScatterPoint[], radius = 3,
): void {
  ctx.clearRect(0, 0, t.width, t.height);
  ctx.strokeStyle = "#cccccc";
  ctx.strokeRect(t.margin, t.margin, t.width - 2 * t.margin, t.height - 2 * t.margin);
  for (const p of pts) {
    const [sx, sy] = toScreen(t, p.x, p.y);
    ctx.beginPath();
    ctx.arc(sx, sy, p.highlighted ? radius + 2 : radius, 0, 2 * Math.PI);
    ctx.fillStyle = colorFor(p.color);
    ctx.fill();
    if (p.highlighted) {
      ctx.strokeStyle = "#222222";
      ctx.stroke();
    }
  }
}

/** Index of the nearest point within `maxDist` screen pixels, or -1. */
export function hitTest(
  t: Transform, pts: ScatterPoint[], sx: number, sy: number, maxDist = 8,
): number {
  let best = -1;
  let bestD = maxDist * maxDist;
  for (let i = 0; i < pts.length; i++) {
    const [px, py] = toScreen(t, pts[i].x, pts[i].y);
    const d = (px - sx) * (px - sx) + (py - sy) * (py - sy);
    if (d < bestD) {
      bestD = d;
      best = i;
    }
  }
  return best;
}
