"""Pure-numpy implementations of the O(n^2) hot kernels.

These are the fallback path when the compiled extension is unavailable
(see kernels.py for the selection logic). Both paths must produce
bit-identical results; the test suite checks this whenever the compiled
extension is importable.
"""

import numpy as np

# Row-chunked operations bound peak memory to O(chunk * n) on top of the
# distance matrix itself.
_CHUNK = 512


def pairwise_distances(points: np.ndarray) -> np.ndarray:
    """Full Euclidean distance matrix, symmetric with zero diagonal."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    n = points.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        diff = points[start:stop, None, :] - points[None, :, :]
        # plain sum matches the compiled kernel's sequential accumulation
        # bit-for-bit (einsum rounds differently)
        np.sqrt((diff * diff).sum(axis=-1), out=out[start:stop])
    # (x_i - x_j)^2 == (x_j - x_i)^2 in IEEE arithmetic, so the matrix is
    # exactly symmetric; only the diagonal needs pinning.
    np.fill_diagonal(out, 0.0)
    return out


def density_counts(dm: np.ndarray, dc: float) -> np.ndarray:
    """rho[i] = number of j != i with d[i][j] < dc (strict)."""
    n = dm.shape[0]
    rho = np.empty(n, dtype=np.int64)
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        block = dm[start:stop]
        counts = (block < dc).sum(axis=1)
        # the diagonal entry is 0 < dc whenever dc > 0; remove the self pair
        rho[start:stop] = counts - (dc > 0.0)
    return rho


def delta_parent(dm: np.ndarray, order: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distance to, and index of, the nearest point earlier in `order`.

    The order-first point gets parent -1 and delta = max distance to any
    other point (0.0 when n == 1). Argmin ties resolve to the earliest
    order position.
    """
    n = dm.shape[0]
    delta = np.zeros(n, dtype=np.float64)
    parent = np.full(n, -1, dtype=np.int64)
    root = int(order[0])
    if n > 1:
        delta[root] = dm[root].max()
    for pos in range(1, n):
        i = int(order[pos])
        prefix = dm[i, order[:pos]]
        best = int(np.argmin(prefix))  # first occurrence = earliest order position
        parent[i] = int(order[best])
        delta[i] = prefix[best]
    return delta, parent
