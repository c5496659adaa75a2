import { describe, expect, it } from "vitest";

import { colorFor, fitTransform, hitTest, toData, toScreen } from "../src/scatter.js";

describe("transform", () => {
  const t = fitTransform([0, 10], [0, 20], 400, 300);

  it("round-trips screen and data coordinates", () => {
    const [sx, sy] = toScreen(t, 4.2, 13.7);
    const [x, y] = toData(t, sx, sy);
    expect(x).toBeCloseTo(4.2, 10);
    expect(y).toBeCloseTo(13.7, 10);
  });

  it("y axis points up", () => {
    const [, syLow] = toScreen(t, 0, 0);
    const [, syHigh] = toScreen(t, 0, 20);
    expect(syHigh).toBeLessThan(syLow);
  });

  it("degenerate extent still yields a usable range", () => {
    const flat = fitTransform([5, 5], [1, 1], 100, 100);
    expect(flat.xMax).toBeGreaterThan(flat.xMin);
    expect(flat.yMax).toBeGreaterThan(flat.yMin);
  });
});

describe("hitTest", () => {
  const t = fitTransform([0, 10], [0, 10], 400, 400);
  const pts = [
    { x: 2, y: 2, color: -1 },
    { x: 8, y: 8, color: -1 },
  ];

  it("finds the point under the cursor", () => {
    const [sx, sy] = toScreen(t, 8, 8);
    expect(hitTest(t, pts, sx + 2, sy - 2)).toBe(1);
  });

  it("misses when nothing is close", () => {
    const [sx, sy] = toScreen(t, 5, 5);
    expect(hitTest(t, pts, sx, sy)).toBe(-1);
  });
});

describe("colorFor", () => {
  it("neutral for unlabeled", () => {
    expect(colorFor(-1)).toBe("#999999");
  });

  it("cycles the palette", () => {
    expect(colorFor(0)).toBe(colorFor(10));
  });
});
