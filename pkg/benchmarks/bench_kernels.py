"""Timing comparison of the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [n ...]

Runs each hot kernel on random 2-D data at the given sizes (default
1000 2000 4000) and prints best-of-5 wall times for both paths plus the
speedup. The two paths produce bit-identical output; this script also
asserts that on the fly.
"""

import sys
import time

import numpy as np

from peakmerge import _kernels_py
from peakmerge.density import density_order

try:
    from peakmerge import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, reps=5):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(n, rng):
    pts = np.ascontiguousarray(rng.uniform(0, 100, size=(n, 2)))
    rows = []

    t_py, dm = best_of(lambda: _kernels_py.pairwise_distances(pts))
    t_c, dm_c = best_of(lambda: _ckernels.pairwise_distances(pts))
    assert np.array_equal(dm, dm_c)
    rows.append(("pairwise_distances", t_py, t_c))

    dc = float(np.quantile(dm[np.triu_indices(n, 1)], 0.02))
    t_py, rho = best_of(lambda: _kernels_py.density_counts(dm, dc))
    t_c, rho_c = best_of(lambda: np.asarray(_ckernels.density_counts(dm, dc)))
    assert np.array_equal(rho, rho_c)
    rows.append(("density_counts", t_py, t_c))

    order = density_order(rho)
    t_py, (d1, p1) = best_of(lambda: _kernels_py.delta_parent(dm, order))
    t_c, (d2, p2) = best_of(lambda: _ckernels.delta_parent(dm, order))
    assert np.array_equal(np.asarray(d1), np.asarray(d2))
    assert np.array_equal(np.asarray(p1), np.asarray(p2))
    rows.append(("delta_parent", t_py, t_c))
    return rows


def main():
    if _ckernels is None:
        print("compiled extension not built; nothing to compare")
        return 1
    sizes = [int(a) for a in sys.argv[1:]] or [1000, 2000, 4000]
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22} {'n':>6} {'numpy':>10} {'compiled':>10} {'speedup':>8}")
    for n in sizes:
        for name, t_py, t_c in bench(n, rng):
            print(f"{name:<22} {n:>6} {t_py:>9.4f}s {t_c:>9.4f}s {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
