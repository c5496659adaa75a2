"""Bit-exactness checks between the compiled and numpy kernel paths."""

import numpy as np
import pytest

from peakmerge import _kernels_py
from peakmerge import kernels
from peakmerge.density import density_order

try:
    from peakmerge import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(
    _ckernels is None, reason="compiled extension not built"
)


def random_cases(count=12, max_n=120):
    rng = np.random.default_rng(99)
    for _ in range(count):
        n = int(rng.integers(2, max_n))
        dim = int(rng.integers(1, 6))
        yield rng.uniform(-5, 5, size=(n, dim))


@needs_compiled
class TestBitExactness:
    def test_pairwise(self):
        for pts in random_cases():
            a = _kernels_py.pairwise_distances(pts)
            b = _ckernels.pairwise_distances(np.ascontiguousarray(pts))
            assert np.array_equal(a, b)

    def test_density_counts(self):
        rng = np.random.default_rng(7)
        for pts in random_cases():
            dm = _kernels_py.pairwise_distances(pts)
            dc = float(rng.uniform(0.1, 6.0))
            a = _kernels_py.density_counts(dm, dc)
            b = np.asarray(_ckernels.density_counts(dm, dc))
            assert np.array_equal(a, b)

    def test_delta_parent(self):
        for pts in random_cases():
            dm = _kernels_py.pairwise_distances(pts)
            rho = _kernels_py.density_counts(dm, 2.0)
            order = density_order(rho)
            d1, p1 = _kernels_py.delta_parent(dm, order)
            d2, p2 = _ckernels.delta_parent(dm, order)
            assert np.array_equal(np.asarray(d1), np.asarray(d2))
            assert np.array_equal(np.asarray(p1), np.asarray(p2))

    def test_chunk_boundary_sizes(self):
        # sizes straddling the pure-path chunk size must agree too
        rng = np.random.default_rng(11)
        for n in (511, 512, 513):
            pts = rng.uniform(0, 10, size=(n, 2))
            a = _kernels_py.pairwise_distances(pts)
            b = _ckernels.pairwise_distances(np.ascontiguousarray(pts))
            assert np.array_equal(a, b)


class TestDispatch:
    def test_env_override_forces_pure(self):
        import subprocess
        import sys

        code = (
            "import peakmerge.kernels as k; print(k.USING_COMPILED)"
        )
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"PEAKMERGE_PURE": "1", "PATH": "/usr/bin:/bin"},
        )
        assert out.stdout.strip() == "False"

    def test_wrappers_accept_noncontiguous(self):
        pts = np.asfortranarray(np.random.default_rng(0).uniform(0, 1, (10, 3)))
        dm = kernels.pairwise_distances(pts)
        assert dm.shape == (10, 10)
        assert np.all(np.diag(dm) == 0.0)

    def test_symmetry(self):
        pts = np.random.default_rng(1).uniform(0, 1, (64, 4))
        dm = kernels.pairwise_distances(pts)
        assert np.array_equal(dm, dm.T)
