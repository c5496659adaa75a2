"""End-to-end two-phase clustering: density-peak split, then merge."""

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cfsfdp import CenterSet, Labeling, assign, select_centers_auto
from .dataset import DcSpec, PointSet, pairwise_distance, resolve_dc
from .density import DecisionGraphData, DensityProfile, compute_profile, decision_graph
from .merge import MergeTrace, Termination, _dense_relabel, merge_loop
from .simgraph import SimilarityGraph, knn_graph


def default_center_count(gamma: np.ndarray, n: int, target_k: Optional[int]) -> int:
    """How many Phase I centers to auto-select when the user gave no count.

    Over-segmentation is safe (the merge phase repairs it), so take the
    larger of 2x the target count and the count of clear gamma outliers,
    capped at n/10.
    """
    k = target_k if target_k is not None else 2
    outliers = int((gamma > gamma.mean() + 3.0 * gamma.std()).sum())
    count = max(2 * k, outliers)
    count = min(count, max(2, n // 10))
    return int(min(max(count, k, 1), n))


@dataclass(frozen=True)
class PipelineResult:
    points: PointSet
    dm: np.ndarray
    dc: float
    profile: DensityProfile
    graph_data: DecisionGraphData
    centers: CenterSet
    phase1: Labeling  # dense-relabeled Phase I clusters
    graph: Optional[SimilarityGraph]
    trace: MergeTrace
    final: Labeling
    timings: dict = field(default_factory=dict)


def run(
    ps: PointSet,
    dc_spec: DcSpec,
    n_neighbor: int,
    beta: float,
    termination: Termination,
    centers: Optional[Sequence[int]] = None,
    initial_centers: Optional[int] = None,
    dm: Optional[np.ndarray] = None,
) -> PipelineResult:
    """Run both phases and return every intermediate artifact.

    `centers` pins the Phase I centers explicitly; otherwise the top
    `initial_centers` gamma points are used (default_center_count when
    that is None too). A precomputed distance matrix can be passed to
    amortize repeated runs on the same points.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    if dm is None:
        dm = pairwise_distance(ps)
    timings["distance"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    dc = resolve_dc(dm, dc_spec)
    profile = compute_profile(dm, dc)
    graph_data = decision_graph(profile.rho, profile.delta)
    timings["density"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if centers is not None:
        center_set = CenterSet(centers=np.asarray(list(centers), dtype=np.int64))
    else:
        count = initial_centers
        if count is None:
            target_k = termination.k if termination.mode == "target-count" else None
            count = default_center_count(graph_data.gamma, ps.n, target_k)
        center_set = select_centers_auto(graph_data, count)
    phase1_raw = assign(profile, center_set, dm=dm)
    timings["assign"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    graph = knn_graph(dm, n_neighbor) if phase1_raw.m > 1 else None
    timings["graph"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if graph is not None:
        trace = merge_loop(phase1_raw, graph, dm, dc, beta, termination)
    else:
        trace = MergeTrace(
            steps=(), initial_label=phase1_raw.label.copy(), final=_dense_relabel(phase1_raw.label)
        )
    timings["merge"] = time.perf_counter() - t0

    return PipelineResult(
        points=ps,
        dm=dm,
        dc=dc,
        profile=profile,
        graph_data=graph_data,
        centers=center_set,
        phase1=_dense_relabel(phase1_raw.label),
        graph=graph,
        trace=trace,
        final=trace.final,
        timings=timings,
    )
