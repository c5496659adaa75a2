"""Mutual k-nearest-neighbor similarity graph and edge aggregates."""

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

Edge = tuple[int, int, float]  # (u, v, weight) with u < v


def similarity_weight(d: np.ndarray | float):
    """Distance-to-similarity map, bounded in (0, 1], safe at d = 0."""
    return 1.0 / (1.0 + d)


@dataclass
class SimilarityGraph:
    """k-nearest-neighbor lists with similarity weights.

    neighbors[i] holds min(k, n-1) indices sorted by descending weight,
    ties by index ascending; weights aligned.
    """

    k: int
    neighbors: np.ndarray  # (n, kk) int64
    weights: np.ndarray  # (n, kk) float64
    _mutual: Optional[tuple[np.ndarray, np.ndarray, np.ndarray]] = field(
        default=None, repr=False, compare=False
    )

    @property
    def n(self) -> int:
        return self.neighbors.shape[0]

    def mutual_pairs(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """All unordered pairs {u, v} appearing in each other's lists.

        Returns (u, v, w) arrays with u < v, sorted lexicographically.
        Cached: the graph is immutable after construction.
        """
        if self._mutual is None:
            n = self.n
            kk = self.neighbors.shape[1]
            src = np.repeat(np.arange(n, dtype=np.int64), kk)
            dst = self.neighbors.ravel()
            w = self.weights.ravel()
            codes = src * n + dst
            mutual = np.isin(dst * n + src, codes)
            keep = mutual & (src < dst)
            u, v, w = src[keep], dst[keep], w[keep]
            sorter = np.lexsort((v, u))
            self._mutual = (u[sorter], v[sorter], w[sorter])
        return self._mutual


@dataclass(frozen=True)
class EdgeAggregate:
    """Summed and averaged weight of a retained edge set."""

    total_weight: float
    edge_count: int
    mean_weight: float

    @classmethod
    def empty(cls) -> "EdgeAggregate":
        return cls(0.0, 0, 0.0)


def knn_graph(dm: np.ndarray, k: int) -> SimilarityGraph:
    """Per-point k nearest others (ties by index ascending), w = 1/(1+d)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = dm.shape[0]
    kk = min(k, n - 1)
    neighbors = np.empty((n, kk), dtype=np.int64)
    chunk = max(1, min(n, 256))
    for start in range(0, n, chunk):
        stop = min(start + chunk, n)
        block = dm[start:stop].copy()
        for r in range(start, stop):
            block[r - start, r] = np.inf
        neighbors[start:stop] = np.argsort(block, axis=1, kind="stable")[:, :kk]
    weights = similarity_weight(np.take_along_axis(dm, neighbors, axis=1))
    return SimilarityGraph(k=k, neighbors=neighbors, weights=weights)


def prune_candidates(candidates: Iterable[Edge]) -> list[Edge]:
    """Keep, for each endpoint, only its best candidate edge.

    Best = maximum weight, ties broken by smaller partner index. An edge
    survives if at least one of its endpoints retains it. Candidates are
    cross-cluster, so an endpoint's partners all lie in the opposite
    cluster.
    """
    best: dict[int, Edge] = {}
    for edge in candidates:
        u, v, w = edge
        for endpoint, partner in ((u, v), (v, u)):
            cur = best.get(endpoint)
            if cur is None:
                best[endpoint] = edge
                continue
            cw = cur[2]
            cur_partner = cur[1] if cur[0] == endpoint else cur[0]
            if w > cw or (w == cw and partner < cur_partner):
                best[endpoint] = edge
    retained = {(e[0], e[1]): e for e in best.values()}
    return sorted(retained.values())


def mutual_cross_edges(
    g: SimilarityGraph, label: np.ndarray, ci: int, cj: int
) -> list[Edge]:
    """Retained mutual-kNN edges between clusters ci and cj."""
    if ci == cj:
        raise ValueError("clusters must differ")
    u, v, w = g.mutual_pairs()
    lu, lv = label[u], label[v]
    keep = ((lu == ci) & (lv == cj)) | ((lu == cj) & (lv == ci))
    candidates = [(int(a), int(b), float(c)) for a, b, c in zip(u[keep], v[keep], w[keep])]
    return prune_candidates(candidates)


def aggregate(edges: Iterable[Edge]) -> EdgeAggregate:
    """Total, count, and mean of retained edge weights; zeros when empty."""
    edges = list(edges)
    if not edges:
        return EdgeAggregate.empty()
    total = float(sum(e[2] for e in edges))
    count = len(edges)
    return EdgeAggregate(total, count, total / count)


def internal_aggregate(
    members: np.ndarray, g: SimilarityGraph, bisection: np.ndarray
) -> EdgeAggregate:
    """Aggregate of retained mutual edges crossing a cluster's bisection.

    `bisection` gives a 0/1 part per member, aligned with the
    ascending-sorted member indices (bisect_cluster's convention).
    """
    members = np.sort(np.asarray(members, dtype=np.int64))
    part = np.full(g.n, -1, dtype=np.int64)
    part[members] = np.asarray(bisection, dtype=np.int64)
    u, v, w = g.mutual_pairs()
    keep = (part[u] >= 0) & (part[v] >= 0) & (part[u] != part[v])
    candidates = [(int(a), int(b), float(c)) for a, b, c in zip(u[keep], v[keep], w[keep])]
    return aggregate(prune_candidates(candidates))
