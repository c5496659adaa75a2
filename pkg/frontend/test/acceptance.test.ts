/** End-to-end checks against the real service and command line. */

import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Client } from "../src/api.js";
import { labelsAt, samePartition } from "../src/replay.js";
import { SessionState } from "../src/state.js";
import { REPO_ROOT, runCli, ServerHandle, startServer, stopServer } from "./server.js";

const MOONS = path.join(REPO_ROOT, "data", "moons.csv");
const DUMBBELL = path.join(
  path.dirname(new URL(import.meta.url).pathname), "fixtures", "dumbbell.csv",
);

describe("UI round-trip against the CLI", () => {
  let server: ServerHandle | null = null;
  let tmp: string;

  beforeAll(async () => {
    tmp = mkdtempSync(path.join(tmpdir(), "peakmerge-ui-"));
    server = await startServer(MOONS, 8911, ["--label-column", "2"]);
  }, 60_000);

  afterAll(() => {
    stopServer(server);
    rmSync(tmp, { recursive: true, force: true });
  });

  it("top-2 gamma selection reproduces the CLI labels byte for byte", async () => {
    const client = new Client(server!.baseUrl);
    const state = new SessionState();
    state.loadPoints((await client.points()).points, null);
    state.loadRecords(await client.decisionGraph());

    for (const record of state.topByGamma(2)) {
      state.toggleCenter(record.index);
    }
    const centers = state.centersForRequest();
    expect(centers).toHaveLength(2);

    expect(state.beginRun()).toBe(true);
    const result = await client.cluster(centers, {
      k: 2, beta: 2, n_neighbor: 10, dc: "5%",
    });
    state.finishRun(result);

    const labelsFile = path.join(tmp, "cli-labels.txt");
    const cli = await runCli([
      "cluster", "--input", MOONS, "--label-column", "2",
      "--centers", centers.join(","), "--dc", "5%",
      "--k-neighbors", "10", "--beta", "2", "--clusters", "2",
      "--out-labels", labelsFile,
    ]);
    expect(cli.code, cli.output).toBe(0);

    const uiBytes = result.labels.join("\n") + "\n";
    const cliBytes = readFileSync(labelsFile, "utf8");
    expect(uiBytes).toBe(cliBytes);
  }, 120_000);
});

describe("merge-trace replay fidelity", () => {
  let server: ServerHandle | null = null;

  beforeAll(async () => {
    server = await startServer(DUMBBELL, 8912);
  }, 60_000);

  afterAll(() => stopServer(server));

  it("slider position t equals the first-t-steps reconstruction", async () => {
    const client = new Client(server!.baseUrl);
    const { labels, trace } = await client.cluster([0, 3, 4, 9], {
      k: 2, beta: 2, n_neighbor: 5, dc: "1.2",
    });
    expect(trace.steps).toHaveLength(2);

    for (let t = 0; t <= trace.steps.length; t++) {
      // independent reconstruction: apply the first t steps directly
      const expected = [...trace.initial_labels];
      for (const step of trace.steps.slice(0, t)) {
        for (let i = 0; i < expected.length; i++) {
          if (expected[i] === step.a || expected[i] === step.b) {
            expected[i] = step.new_cluster;
          }
        }
      }
      expect(labelsAt(trace, t)).toEqual(expected);
    }

    // scrubbing to the end shows the run's final partition (ids differ
    // only by the dense relabeling the server applies at the end)
    expect(samePartition(labelsAt(trace, trace.steps.length), labels)).toBe(true);
    expect(samePartition(labelsAt(trace, trace.steps.length), trace.final_labels))
      .toBe(true);
  }, 120_000);

  it("the two blobs end up separated", async () => {
    const client = new Client(server!.baseUrl);
    const { labels } = await client.cluster([4, 9], { k: 2, dc: "1.2" });
    expect(samePartition(labels, [0, 0, 0, 0, 0, 1, 1, 1, 1, 1])).toBe(true);
  }, 120_000);
});
