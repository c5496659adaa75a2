/** Merge-trace replay: the labeling shown at slider position t.
 *
 * Position 0 is the server's initial (pre-merge) labeling; position t
 * applies the first t merge steps. Cluster ids stay in the server's id
 * space, so colors remain stable while scrubbing.
 */

import type { MergeTrace } from "./api.js";

export function labelsAt(trace: MergeTrace, t: number): number[] {
  if (t < 0 || t > trace.steps.length) {
    throw new RangeError(`slider position ${t} outside 0..${trace.steps.length}`);
  }
  // forward each original cluster id through the first t merges
  const remap = new Map<number, number>();
  for (const step of trace.steps.slice(0, t)) {
    remap.set(step.a, step.new_cluster);
    remap.set(step.b, step.new_cluster);
  }
  const resolve = (id: number): number => {
    let cur = id;
    while (remap.has(cur)) {
      cur = remap.get(cur)!;
    }
    return cur;
  };
  return trace.initial_labels.map(resolve);
}

/** Number of distinct clusters visible at position t. */
export function clusterCountAt(trace: MergeTrace, t: number): number {
  return new Set(labelsAt(trace, t)).size;
}

/** True when two labelings define the same partition (ids may differ). */
export function samePartition(a: number[], b: number[]): boolean {
  if (a.length !== b.length) {
    return false;
  }
  const fwd = new Map<number, number>();
  const bwd = new Map<number, number>();
  for (let i = 0; i < a.length; i++) {
    if ((fwd.has(a[i]) && fwd.get(a[i]) !== b[i]) ||
        (bwd.has(b[i]) && bwd.get(b[i]) !== a[i])) {
      return false;
    }
    fwd.set(a[i], b[i]);
    bwd.set(b[i], a[i]);
  }
  return true;
}
