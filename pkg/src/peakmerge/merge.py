"""Relative inter-connectivity / closeness and the agglomerative merge loop."""

import heapq
import json
import warnings
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cfsfdp import Labeling, bisect_cluster
from .simgraph import (
    EdgeAggregate,
    SimilarityGraph,
    aggregate,
    internal_aggregate,
    prune_candidates,
)

# Floor for zero internal denominators (singletons, size-2 clusters with no
# mutual edges). A positive cross weight over the floor produces a huge
# score, so weakly-bound fragments get absorbed early.
DENOM_FLOOR = 1e-12


def _normalized_ratio(
    numerator: float,
    inner_i: float,
    inner_j: float,
    size_i: int,
    size_j: int,
) -> float:
    if numerator == 0.0:
        return 0.0
    total = size_i + size_j
    denom = (size_i / total) * inner_i + (size_j / total) * inner_j
    return numerator / max(denom, DENOM_FLOOR)


def relative_interconnectivity(
    cross: EdgeAggregate,
    inner_i: EdgeAggregate,
    inner_j: EdgeAggregate,
    size_i: int,
    size_j: int,
) -> float:
    """Cross edge-weight sum over the size-weighted internal sums."""
    return _normalized_ratio(
        cross.total_weight, inner_i.total_weight, inner_j.total_weight, size_i, size_j
    )


def relative_closeness(
    cross: EdgeAggregate,
    inner_i: EdgeAggregate,
    inner_j: EdgeAggregate,
    size_i: int,
    size_j: int,
) -> float:
    """Cross mean edge weight over the size-weighted internal means."""
    return _normalized_ratio(
        cross.mean_weight, inner_i.mean_weight, inner_j.mean_weight, size_i, size_j
    )


def pair_score(ri: float, rc: float, beta: float) -> float:
    """Combined merge criterion ri * rc**beta."""
    if not beta > 0:
        raise ValueError("beta must be positive")
    if rc == 0.0:
        return 0.0
    return ri * rc**beta


@dataclass(frozen=True)
class PairCriteria:
    ri: float
    rc: float
    score: float


@dataclass(frozen=True)
class Termination:
    """Stop condition: a target cluster count, or RI/RC thresholds."""

    mode: str  # "target-count" | "thresholds"
    k: Optional[int] = None
    t_ri: Optional[float] = None
    t_rc: Optional[float] = None

    def __post_init__(self):
        if self.mode == "target-count":
            if self.k is None or self.k < 1:
                raise ValueError("target-count termination needs k >= 1")
        elif self.mode == "thresholds":
            if self.t_ri is None or self.t_rc is None or self.t_ri < 0 or self.t_rc < 0:
                raise ValueError("thresholds termination needs t_ri, t_rc >= 0")
        else:
            raise ValueError(f"unknown termination mode {self.mode!r}")

    @classmethod
    def target_count(cls, k: int) -> "Termination":
        return cls(mode="target-count", k=k)

    @classmethod
    def thresholds(cls, t_ri: float, t_rc: float) -> "Termination":
        return cls(mode="thresholds", t_ri=t_ri, t_rc=t_rc)


@dataclass(frozen=True)
class MergeStep:
    cluster_a: int
    cluster_b: int
    ri: float
    rc: float
    score: float
    new_cluster: int
    count_after: int
    fallback: bool = False

    def to_record(self) -> dict:
        return {
            "a": self.cluster_a,
            "b": self.cluster_b,
            "ri": self.ri,
            "rc": self.rc,
            "score": self.score,
            "new_cluster": self.new_cluster,
            "count_after": self.count_after,
            "fallback": self.fallback,
        }


@dataclass(frozen=True)
class MergeTrace:
    """Ordered merge decisions plus the initial and final labelings.

    Initial cluster ids are the Phase I labels 0..m-1; each merge mints a
    fresh id, so a step's (a, b, new_cluster) triple is enough to replay
    the whole history.
    """

    steps: tuple[MergeStep, ...]
    initial_label: np.ndarray
    final: Labeling

    def to_json(self) -> str:
        return json.dumps(
            {
                "initial_labels": [int(x) for x in self.initial_label],
                "steps": [s.to_record() for s in self.steps],
                "final_labels": [int(x) for x in self.final.label],
            }
        )


def _dense_relabel(raw: np.ndarray) -> Labeling:
    """Map arbitrary cluster ids to dense 0-based ids by first appearance."""
    mapping: dict[int, int] = {}
    out = np.empty_like(raw)
    for i, value in enumerate(raw.tolist()):
        if value not in mapping:
            mapping[value] = len(mapping)
        out[i] = mapping[value]
    return Labeling(label=out, m=len(mapping))


def compute_pair_criteria(
    cross: EdgeAggregate,
    inner_i: EdgeAggregate,
    inner_j: EdgeAggregate,
    size_i: int,
    size_j: int,
    beta: float,
) -> PairCriteria:
    ri = relative_interconnectivity(cross, inner_i, inner_j, size_i, size_j)
    rc = relative_closeness(cross, inner_i, inner_j, size_i, size_j)
    return PairCriteria(ri=ri, rc=rc, score=pair_score(ri, rc, beta))


def _closest_cluster_pair(
    dm: np.ndarray, cluster_of: np.ndarray, live: set[int]
) -> tuple[int, int]:
    """Pair of live clusters containing the globally closest cross pair."""
    n = dm.shape[0]
    best = np.inf
    best_pair: Optional[tuple[int, int]] = None
    chunk = max(1, min(n, 512))
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        block = dm[start:stop].copy()
        same = cluster_of[start:stop, None] == cluster_of[None, :]
        block[same] = np.inf
        flat = int(np.argmin(block))
        r, c = divmod(flat, n)
        d = block[r, c]
        if d < best:
            best = d
            a, b = int(cluster_of[start + r]), int(cluster_of[c])
            best_pair = (min(a, b), max(a, b))
    if best_pair is None:
        raise RuntimeError("no cross-cluster pair found")
    return best_pair


def merge_loop(
    initial: Labeling,
    g: SimilarityGraph,
    dm: np.ndarray,
    dc: float,
    beta: float,
    term: Termination,
) -> MergeTrace:
    """Greedy agglomeration of the Phase I clusters.

    Maintains a lazy max-heap of pair scores; entries whose clusters were
    merged away are skipped on pop. Internal aggregates are computed per
    cluster (via bisection) and cached until the cluster itself is merged.
    """
    n = initial.label.shape[0]
    m0 = initial.m
    if term.mode == "target-count" and term.k > m0:
        raise ValueError(f"target cluster count {term.k} exceeds initial count {m0}")

    clusters: dict[int, np.ndarray] = {
        cid: np.flatnonzero(initial.label == cid) for cid in range(m0)
    }
    cluster_of = initial.label.copy()

    def internal_of(members: np.ndarray) -> EdgeAggregate:
        if members.size < 2:
            return EdgeAggregate.empty()
        bisection = bisect_cluster(members, dm, dc)
        return internal_aggregate(members, g, bisection)

    internal = {cid: internal_of(members) for cid, members in clusters.items()}

    # candidate (unpruned) mutual edges grouped by current cluster pair
    pair_edges: dict[tuple[int, int], list] = defaultdict(list)
    mu, mv, mw = g.mutual_pairs()
    cu, cv = cluster_of[mu], cluster_of[mv]
    for a, b, ca, cb, wt in zip(mu.tolist(), mv.tolist(), cu.tolist(), cv.tolist(), mw.tolist()):
        if ca != cb:
            pair_edges[(min(ca, cb), max(ca, cb))].append((a, b, wt))

    neighbors: dict[int, set[int]] = defaultdict(set)
    for a, b in pair_edges:
        neighbors[a].add(b)
        neighbors[b].add(a)

    criteria: dict[tuple[int, int], PairCriteria] = {}
    heap: list[tuple[float, int, int]] = []

    def evaluate_pair(key: tuple[int, int]) -> None:
        a, b = key
        cross = aggregate(prune_candidates(pair_edges[key]))
        crit = compute_pair_criteria(
            cross, internal[a], internal[b], clusters[a].size, clusters[b].size, beta
        )
        criteria[key] = crit
        heapq.heappush(heap, (-crit.score, a, b))

    for key in sorted(pair_edges):
        evaluate_pair(key)

    live = set(clusters)
    next_id = m0
    steps: list[MergeStep] = []

    def target_reached() -> bool:
        if term.mode == "target-count":
            return len(live) <= term.k
        return False

    while len(live) > 1 and not target_reached():
        while heap and (heap[0][1] not in live or heap[0][2] not in live):
            heapq.heappop(heap)
        if term.mode == "thresholds":
            if not any(
                crit.ri > term.t_ri and crit.rc > term.t_rc
                for (a, b), crit in criteria.items()
                if a in live and b in live
            ):
                break
        fallback = False
        if heap and -heap[0][0] > 0:
            _, a, b = heap[0]
            crit = criteria[(a, b)]
        else:
            if term.mode == "thresholds":
                break
            a, b = _closest_cluster_pair(dm, cluster_of, live)
            crit = criteria.get((a, b), PairCriteria(0.0, 0.0, 0.0))
            fallback = True
            warnings.warn(
                f"no positive-score pair left; merging closest clusters {a} and {b}",
                stacklevel=2,
            )

        new_id = next_id
        next_id += 1
        members = np.sort(np.concatenate([clusters[a], clusters[b]]))
        clusters[new_id] = members
        cluster_of[members] = new_id
        internal[new_id] = internal_of(members)
        live.discard(a)
        live.discard(b)
        live.add(new_id)
        for old in (a, b):
            del clusters[old]
            del internal[old]

        # regroup candidate edges of the merged pair under the new id
        merged_neighbors = (neighbors.pop(a, set()) | neighbors.pop(b, set())) - {a, b}
        pair_edges.pop((min(a, b), max(a, b)), None)
        criteria.pop((min(a, b), max(a, b)), None)
        for x in sorted(merged_neighbors):
            edges = []
            for old in (a, b):
                key = (min(old, x), max(old, x))
                edges.extend(pair_edges.pop(key, []))
                criteria.pop(key, None)
            if edges:
                pair_edges[(x, new_id)] = edges
                neighbors[x].discard(a)
                neighbors[x].discard(b)
                neighbors[x].add(new_id)
                neighbors[new_id].add(x)
                evaluate_pair((x, new_id))

        steps.append(
            MergeStep(
                cluster_a=int(a),
                cluster_b=int(b),
                ri=crit.ri,
                rc=crit.rc,
                score=crit.score,
                new_cluster=new_id,
                count_after=len(live),
                fallback=fallback,
            )
        )

    return MergeTrace(
        steps=tuple(steps),
        initial_label=initial.label.copy(),
        final=_dense_relabel(cluster_of),
    )
