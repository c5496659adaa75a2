/** Typed client for the clustering service. The UI never computes labels
 * itself; everything displayed comes back from these endpoints. */

export interface DecisionGraphRecord {
  index: number;
  rho: number;
  delta: number;
  gamma: number;
}

export interface MergeStepRecord {
  a: number;
  b: number;
  ri: number;
  rc: number;
  score: number;
  new_cluster: number;
  count_after: number;
  fallback: boolean;
}

export interface MergeTrace {
  initial_labels: number[];
  steps: MergeStepRecord[];
  final_labels: number[];
}

export interface PointsResponse {
  points: number[][];
  truth_labels: number[] | null;
}

export interface ClusterResponse {
  labels: number[];
  trace: MergeTrace;
}

export interface ClusterParams {
  k: number;
  beta?: number;
  n_neighbor?: number;
  dc?: string;
  dc_mode?: string;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const res = await fetch(url);
  if (!res.ok) {
    throw new ApiError(res.status, await res.text());
  }
  return res.json() as Promise<T>;
}

async function postJson<T>(url: string, body: unknown): Promise<T> {
  const res = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    let detail = await res.text();
    try {
      detail = JSON.parse(detail).detail ?? detail;
    } catch {
      // plain-text error body
    }
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

export class Client {
  constructor(private baseUrl: string) {}

  points(): Promise<PointsResponse> {
    return getJson(`${this.baseUrl}/points`);
  }

  /** Records arrive sorted by gamma descending, ties by index. */
  decisionGraph(): Promise<DecisionGraphRecord[]> {
    return getJson(`${this.baseUrl}/decision-graph`);
  }

  cluster(centers: number[], params: ClusterParams): Promise<ClusterResponse> {
    return postJson(`${this.baseUrl}/cluster`, { centers, ...params });
  }

  auto(count: number | null, params: ClusterParams): Promise<ClusterResponse> {
    return postJson(`${this.baseUrl}/auto`, count === null ? params : { count, ...params });
  }
}
