/** Session state and the pure interaction logic behind the panel.
 *
 * Everything here is DOM-free so it can be unit tested directly; the
 * render modules subscribe to changes and draw.
 */

import type { ClusterResponse, DecisionGraphRecord } from "./api.js";

export interface Rect {
  rhoMin: number;
  rhoMax: number;
  deltaMin: number;
  deltaMax: number;
}

export class SessionState {
  points: number[][] = [];
  truthLabels: number[] | null = null;
  records: DecisionGraphRecord[] = [];
  selected = new Set<number>();
  lastRun: ClusterResponse | null = null;
  sliderPos = 0;
  requestPending = false;

  get n(): number {
    return this.points.length;
  }

  loadPoints(points: number[][], truthLabels: number[] | null): void {
    this.points = points;
    this.truthLabels = truthLabels;
    this.selected.clear();
    this.lastRun = null;
    this.sliderPos = 0;
  }

  loadRecords(records: DecisionGraphRecord[]): void {
    this.records = records;
  }

  /** Click semantics: toggle membership. Returns the new status. */
  toggleCenter(index: number): boolean {
    if (index < 0 || index >= this.n) {
      throw new RangeError(`center index ${index} out of range 0..${this.n - 1}`);
    }
    if (this.selected.has(index)) {
      this.selected.delete(index);
      return false;
    }
    this.selected.add(index);
    return true;
  }

  /** Brush semantics: add every record inside the rectangle (inclusive). */
  brushSelect(rect: Rect): number[] {
    const added: number[] = [];
    for (const r of this.records) {
      const inside =
        r.rho >= rect.rhoMin &&
        r.rho <= rect.rhoMax &&
        r.delta >= rect.deltaMin &&
        r.delta <= rect.deltaMax;
      if (inside && !this.selected.has(r.index)) {
        this.selected.add(r.index);
        added.push(r.index);
      }
    }
    return added;
  }

  /** Top candidates for the sidebar; records are already gamma-sorted. */
  topByGamma(count: number): DecisionGraphRecord[] {
    return this.records.slice(0, count);
  }

  /** Sorted selection, the exact list sent in POST /cluster. */
  centersForRequest(): number[] {
    return [...this.selected].sort((a, b) => a - b);
  }

  /** Run guard: a nonempty selection and no request in flight. */
  validateRun(): string | null {
    if (this.selected.size === 0) {
      return "select at least one center on the decision graph";
    }
    if (this.requestPending) {
      return "a clustering request is already running";
    }
    return null;
  }

  /** Marks the request in flight; false when the guard rejects it. */
  beginRun(): boolean {
    if (this.validateRun() !== null) {
      return false;
    }
    this.requestPending = true;
    return true;
  }

  finishRun(result: ClusterResponse | null): void {
    this.requestPending = false;
    if (result !== null) {
      this.lastRun = result;
      this.sliderPos = result.trace.steps.length;
    }
  }

  get sliderMax(): number {
    return this.lastRun === null ? 0 : this.lastRun.trace.steps.length;
  }

  setSlider(pos: number): number {
    this.sliderPos = Math.min(Math.max(0, Math.round(pos)), this.sliderMax);
    return this.sliderPos;
  }
}
