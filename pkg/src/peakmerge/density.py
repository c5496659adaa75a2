"""Per-point density, delta, parent pointers, and decision-graph records."""

import json
from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True)
class DensityProfile:
    """Density landscape of a point set under a fixed cutoff distance.

    parent[i] is the nearest point preceding i in the density order, -1
    for the order-first point. order sorts indices by (density desc,
    index asc).
    """

    rho: np.ndarray  # (n,) int64
    delta: np.ndarray  # (n,) float64
    parent: np.ndarray  # (n,) int64, -1 = no parent
    order: np.ndarray  # (n,) int64 permutation

    @property
    def n(self) -> int:
        return self.rho.shape[0]


def local_density(dm: np.ndarray, dc: float) -> np.ndarray:
    """rho[i] = number of other points strictly closer than dc."""
    if not dc > 0:
        raise ValueError("dc must be positive")
    return kernels.density_counts(dm, dc)


def density_order(rho: np.ndarray) -> np.ndarray:
    """Indices sorted by density descending, ties by index ascending."""
    return np.argsort(-np.asarray(rho, dtype=np.int64), kind="stable").astype(np.int64)


def delta_and_parent(dm: np.ndarray, order: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distance and pointer to the nearest point earlier in the density order.

    The order-first point has no parent; its delta is the distance to the
    farthest point (0 for a singleton).
    """
    return kernels.delta_parent(dm, order)


def compute_profile(dm: np.ndarray, dc: float) -> DensityProfile:
    rho = local_density(dm, dc)
    order = density_order(rho)
    delta, parent = delta_and_parent(dm, order)
    return DensityProfile(rho=rho, delta=delta, parent=parent, order=order)


def _minmax(values: np.ndarray) -> np.ndarray:
    lo = values.min()
    hi = values.max()
    if hi == lo:
        return np.zeros_like(values, dtype=np.float64)
    return (values - lo) / (hi - lo)


@dataclass(frozen=True)
class DecisionGraphData:
    """Per-point (rho, delta, gamma) records backing center selection.

    gamma multiplies min-max normalized rho and delta; it ranks how
    peak-like each point is.
    """

    rho: np.ndarray
    delta: np.ndarray
    gamma: np.ndarray

    @property
    def n(self) -> int:
        return self.rho.shape[0]

    def records(self) -> list[dict]:
        """JSON-ready records, one per point, in index order."""
        return [
            {
                "index": int(i),
                "rho": int(self.rho[i]),
                "delta": float(self.delta[i]),
                "gamma": float(self.gamma[i]),
            }
            for i in range(self.n)
        ]

    def records_by_gamma(self) -> list[dict]:
        """Records sorted by gamma descending, ties by index ascending."""
        recs = self.records()
        recs.sort(key=lambda r: (-r["gamma"], r["index"]))
        return recs

    def to_json(self) -> str:
        return json.dumps(self.records_by_gamma())


def decision_graph(rho: np.ndarray, delta: np.ndarray) -> DecisionGraphData:
    """Build decision-graph records from aligned rho and delta vectors."""
    rho = np.asarray(rho, dtype=np.int64)
    delta = np.asarray(delta, dtype=np.float64)
    if rho.shape != delta.shape:
        raise ValueError("rho and delta must be aligned")
    gamma = _minmax(rho.astype(np.float64)) * _minmax(delta)
    return DecisionGraphData(rho=rho, delta=delta, gamma=gamma)
