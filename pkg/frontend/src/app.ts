/** Panel wiring: decision-graph selection on the left, colored point
 * cloud with the merge-step slider on the right. */

import { ApiError, Client } from "./api.js";
import { labelsAt } from "./replay.js";
import {
  draw, fitTransform, hitTest, toData, Transform, ScatterPoint,
} from "./scatter.js";
import { SessionState } from "./state.js";

const state = new SessionState();
const client = new Client(
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8765",
);

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

const dgCanvas = el<HTMLCanvasElement>("decision-graph");
const cloudCanvas = el<HTMLCanvasElement>("point-cloud");
const statusLine = el<HTMLDivElement>("status");
const sidebar = el<HTMLUListElement>("gamma-list");
const slider = el<HTMLInputElement>("step-slider");
const sliderLabel = el<HTMLSpanElement>("step-label");
const runButton = el<HTMLButtonElement>("run");

let dgTransform: Transform | null = null;
let cloudTransform: Transform | null = null;
let brushStart: [number, number] | null = null;

function setStatus(text: string, isError = false): void {
  statusLine.textContent = text;
  statusLine.className = isError ? "error" : "";
}

function dgPoints(): ScatterPoint[] {
  return state.records.map((r) => ({
    x: r.rho,
    y: r.delta,
    color: state.selected.has(r.index) ? 2 : -1,
    highlighted: state.selected.has(r.index),
  }));
}

function renderDecisionGraph(): void {
  if (state.records.length === 0) {
    setStatus("no data loaded");
    return;
  }
  const ctx = dgCanvas.getContext("2d")!;
  dgTransform = fitTransform(
    state.records.map((r) => r.rho),
    state.records.map((r) => r.delta),
    dgCanvas.width, dgCanvas.height,
  );
  draw(ctx, dgTransform, dgPoints());
  sidebar.replaceChildren(
    ...state.topByGamma(12).map((r) => {
      const item = document.createElement("li");
      item.textContent =
        `#${r.index} gamma=${r.gamma.toFixed(3)} rho=${r.rho} delta=${r.delta.toFixed(2)}`;
      if (state.selected.has(r.index)) {
        item.className = "selected";
      }
      item.onclick = () => {
        state.toggleCenter(r.index);
        renderDecisionGraph();
      };
      return item;
    }),
  );
}

function renderCloud(): void {
  const ctx = cloudCanvas.getContext("2d")!;
  if (state.points.length === 0 || state.points[0].length !== 2) {
    // higher-dimensional inputs get no cloud view
    ctx.clearRect(0, 0, cloudCanvas.width, cloudCanvas.height);
    return;
  }
  const labels =
    state.lastRun === null
      ? null
      : labelsAt(state.lastRun.trace, state.sliderPos);
  // dense color slots in order of first appearance, stable while scrubbing
  const slot = new Map<number, number>();
  const colored: ScatterPoint[] = state.points.map((p, i) => {
    let c = -1;
    if (labels !== null) {
      if (!slot.has(labels[i])) {
        slot.set(labels[i], slot.size);
      }
      c = slot.get(labels[i])!;
    }
    return { x: p[0], y: p[1], color: c };
  });
  cloudTransform = fitTransform(
    state.points.map((p) => p[0]),
    state.points.map((p) => p[1]),
    cloudCanvas.width, cloudCanvas.height,
  );
  draw(ctx, cloudTransform, colored, 2);
  sliderLabel.textContent =
    labels === null
      ? ""
      : `step ${state.sliderPos}/${state.sliderMax} (${new Set(labels).size} clusters)`;
}

async function runClustering(): Promise<void> {
  const problem = state.validateRun();
  if (problem !== null) {
    setStatus(problem, true);
    return;
  }
  state.beginRun();
  runButton.disabled = true;
  setStatus("clustering...");
  try {
    const k = Number(el<HTMLInputElement>("param-k").value);
    const result = await client.cluster(state.centersForRequest(), {
      k,
      beta: Number(el<HTMLInputElement>("param-beta").value),
      n_neighbor: Number(el<HTMLInputElement>("param-nn").value),
      dc: el<HTMLInputElement>("param-dc").value,
    });
    state.finishRun(result);
    slider.max = String(state.sliderMax);
    slider.value = String(state.sliderPos);
    setStatus(`done: ${new Set(result.labels).size} clusters, `
      + `${result.trace.steps.length} merges`);
  } catch (err) {
    state.finishRun(null);
    const detail = err instanceof ApiError ? err.message : String(err);
    setStatus(`server error: ${detail}`, true);
  } finally {
    runButton.disabled = false;
    renderCloud();
  }
}

dgCanvas.addEventListener("mousedown", (ev) => {
  brushStart = [ev.offsetX, ev.offsetY];
});

dgCanvas.addEventListener("mouseup", (ev) => {
  if (dgTransform === null || brushStart === null) {
    return;
  }
  const [sx0, sy0] = brushStart;
  brushStart = null;
  const moved = Math.abs(ev.offsetX - sx0) + Math.abs(ev.offsetY - sy0) > 6;
  if (moved) {
    const [x0, y0] = toData(dgTransform, sx0, sy0);
    const [x1, y1] = toData(dgTransform, ev.offsetX, ev.offsetY);
    state.brushSelect({
      rhoMin: Math.min(x0, x1),
      rhoMax: Math.max(x0, x1),
      deltaMin: Math.min(y0, y1),
      deltaMax: Math.max(y0, y1),
    });
  } else {
    const hit = hitTest(dgTransform, dgPoints(), ev.offsetX, ev.offsetY);
    if (hit >= 0) {
      state.toggleCenter(state.records[hit].index);
    }
  }
  renderDecisionGraph();
});

slider.addEventListener("input", () => {
  state.setSlider(Number(slider.value));
  renderCloud();
});

runButton.addEventListener("click", () => void runClustering());

async function boot(): Promise<void> {
  try {
    const [pts, records] = await Promise.all([client.points(), client.decisionGraph()]);
    state.loadPoints(pts.points, pts.truth_labels);
    state.loadRecords(records);
    renderDecisionGraph();
    renderCloud();
    setStatus(`loaded ${state.n} points`);
  } catch (err) {
    setStatus(`cannot reach server: ${String(err)}`, true);
  }
}

void boot();
