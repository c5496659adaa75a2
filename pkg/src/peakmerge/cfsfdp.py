"""Center selection, one-pass assignment, and cluster bisection."""

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .density import DecisionGraphData, DensityProfile, compute_profile, decision_graph


@dataclass(frozen=True)
class CenterSet:
    """Chosen cluster centers, as point indices."""

    centers: np.ndarray  # sorted unique int64 indices
    provenance: str = "manual"  # "manual" or "auto(<count>)"

    def __post_init__(self):
        idx = np.unique(np.asarray(self.centers, dtype=np.int64))
        if idx.size == 0:
            raise ValueError("center set must be nonempty")
        if idx.size != np.asarray(self.centers).size:
            raise ValueError("duplicate center indices")
        if idx.min() < 0:
            raise ValueError("center indices must be nonnegative")
        object.__setattr__(self, "centers", idx)

    @property
    def m(self) -> int:
        return self.centers.size


@dataclass(frozen=True)
class Labeling:
    """Cluster assignment of every point; ids are dense 0..m-1."""

    label: np.ndarray  # (n,) int64
    m: int
    centers: Optional[CenterSet] = None

    def __post_init__(self):
        lab = np.asarray(self.label, dtype=np.int64)
        object.__setattr__(self, "label", lab)
        used = np.unique(lab)
        if not np.array_equal(used, np.arange(self.m)):
            raise ValueError("cluster ids must be exactly 0..m-1, each used")


def select_centers_auto(dg: DecisionGraphData, count: int) -> CenterSet:
    """The `count` points of largest gamma, ties by index ascending."""
    if not 1 <= count <= dg.n:
        raise ValueError(f"center count {count} outside 1..{dg.n}")
    ranked = np.argsort(-dg.gamma, kind="stable")
    return CenterSet(centers=ranked[:count], provenance=f"auto({count})")


def _assign_with_count(
    profile: DensityProfile, centers: CenterSet, dm: Optional[np.ndarray] = None
) -> tuple[np.ndarray, int]:
    n = profile.n
    center_set = set(int(c) for c in centers.centers)
    if max(center_set) >= n:
        raise ValueError("center index out of range")
    # cluster id = rank of the center in the density order
    center_id: dict[int, int] = {}
    for i in profile.order:
        i = int(i)
        if i in center_set:
            center_id[i] = len(center_id)
    label = np.full(n, -1, dtype=np.int64)
    writes = 0
    root = int(profile.order[0])
    adopted: Optional[int] = None
    if root not in center_set:
        warnings.warn(
            "density-order maximum is not a center; assigning it to the nearest center",
            stacklevel=3,
        )
        if dm is not None:
            cand = centers.centers
            drow = dm[root, cand]
            adopted = int(cand[np.argmin(drow)])
        else:
            adopted = int(min(center_id, key=center_id.get))
    for i in profile.order:
        i = int(i)
        if i in center_set:
            label[i] = center_id[i]
        elif i == root:
            label[i] = center_id[adopted]
        else:
            label[i] = label[profile.parent[i]]
        writes += 1
    return label, writes


def assign(
    profile: DensityProfile, centers: CenterSet, dm: Optional[np.ndarray] = None
) -> Labeling:
    """Single-pass allocation: every non-center point inherits its parent's cluster.

    Points are visited in density order, so each parent is labeled before
    its children. dm is only consulted when the density-order maximum is
    not itself a center.
    """
    label, _ = _assign_with_count(profile, centers, dm)
    return Labeling(label=label, m=centers.m, centers=centers)


def bisect_cluster(members: np.ndarray, dm: np.ndarray, dc: float) -> np.ndarray:
    """Split one cluster in two by clustering its members in isolation.

    Recomputes the density profile restricted to `members` (using the
    global distances and cutoff), picks the top-2 gamma points as
    centers, and runs the one-pass assignment. Returns a 0/1 part id per
    member, aligned with the ascending-sorted member indices.
    """
    members = np.sort(np.asarray(members, dtype=np.int64))
    if members.size < 2:
        raise ValueError("bisection needs at least 2 members")
    sub = dm[np.ix_(members, members)]
    profile = compute_profile(sub, dc)
    dg = decision_graph(profile.rho, profile.delta)
    centers = select_centers_auto(dg, 2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        labeling = assign(profile, centers, dm=sub)
    return labeling.label
