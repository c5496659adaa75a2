"""Hot-kernel dispatch: compiled extension when available, numpy otherwise.

Set PEAKMERGE_PURE=1 to force the numpy path (used by the benchmark and
by tests that compare the two implementations).
"""

import os

import numpy as np

from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on build environment
    _ckernels = None

USING_COMPILED = _ckernels is not None and os.environ.get("PEAKMERGE_PURE") != "1"
_impl = _ckernels if USING_COMPILED else _kernels_py


def pairwise_distances(points: np.ndarray) -> np.ndarray:
    pts = np.ascontiguousarray(points, dtype=np.float64)
    return _impl.pairwise_distances(pts)


def density_counts(dm: np.ndarray, dc: float) -> np.ndarray:
    return _impl.density_counts(np.ascontiguousarray(dm), float(dc))


def delta_parent(dm: np.ndarray, order: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return _impl.delta_parent(
        np.ascontiguousarray(dm), np.ascontiguousarray(order, dtype=np.int64)
    )
