import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakmerge.dataset import (
    DcResolutionError,
    DcSpec,
    PointFormatError,
    PointSet,
    load_points,
    pairwise_distance,
    resolve_dc,
)

from .oracles import naive_pairwise, naive_rho


class TestLoadPoints:
    def test_small_csv(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("0,0\n1,0\n0,1\n")
        ps = load_points(f)
        assert ps.n == 3 and ps.dim == 2

    def test_whitespace_delimited(self, tmp_path):
        f = tmp_path / "pts.txt"
        f.write_text("0 0\n1 0\n")
        assert load_points(f).n == 2

    def test_label_column(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("0,0,1\n1,0,1\n5,5,2\n")
        ps = load_points(f, label_column=2)
        assert ps.dim == 2
        assert ps.truth_labels.tolist() == [1, 1, 2]

    def test_header_skip(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("x,y\n0,0\n1,1\n")
        assert load_points(f, header=True).n == 2

    def test_malformed_row_reports_line(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("1,a\n")
        with pytest.raises(PointFormatError, match="line 1"):
            load_points(f)

    def test_inconsistent_dimension(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("0,0\n1,2,3\n")
        with pytest.raises(PointFormatError, match="line 2"):
            load_points(f)

    def test_empty_file(self, tmp_path):
        f = tmp_path / "pts.csv"
        f.write_text("")
        with pytest.raises(PointFormatError, match="no data rows"):
            load_points(f)


class TestPairwiseDistance:
    def test_3_4_5_triangle(self):
        ps = PointSet(points=np.array([[0.0, 0.0], [3.0, 4.0]]))
        dm = pairwise_distance(ps)
        assert dm[0, 1] == 5.0 and dm[1, 0] == 5.0

    def test_zero_diagonal(self):
        rng = np.random.default_rng(0)
        dm = pairwise_distance(PointSet(points=rng.normal(size=(7, 3))))
        assert np.all(np.diag(dm) == 0.0)

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(1)
        ps = PointSet(points=rng.uniform(-5, 5, size=(10, 2)))
        dm = pairwise_distance(ps)
        np.testing.assert_allclose(dm, naive_pairwise(ps.points), rtol=1e-12)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_triangle_inequality_on_sampled_triples(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 20))
        dm = pairwise_distance(PointSet(points=rng.uniform(-10, 10, size=(n, 2))))
        for _ in range(20):
            i, j, k = rng.integers(0, n, size=3)
            assert dm[i, j] <= dm[i, k] + dm[k, j] + 1e-9

    def test_symmetry_exact(self):
        rng = np.random.default_rng(2)
        dm = pairwise_distance(PointSet(points=rng.normal(size=(40, 2))))
        assert np.array_equal(dm, dm.T)


def _oracle_max_rho_dc(dm, pct):
    """Exhaustive scan: smallest nudged candidate meeting the target."""
    import math

    n = dm.shape[0]
    target = math.ceil(pct / 100.0 * n)
    candidates = sorted(set(dm[np.triu_indices(n, 1)].tolist()))
    for c in candidates:
        dc = np.nextafter(c, np.inf)
        if naive_rho(dm, dc).max() >= target:
            return dc
    return None


class TestResolveDc:
    def test_absolute_passthrough(self):
        dm = np.zeros((2, 2))
        assert resolve_dc(dm, DcSpec("absolute", 1.5)) == 1.5

    def test_collinear_example(self, line_dm):
        # 40% of 5 points -> some point must see 2 neighbors
        dc = resolve_dc(line_dm, DcSpec("max-rho-percent", 40))
        assert dc == _oracle_max_rho_dc(line_dm, 40)
        assert np.isclose(dc, 1.0) and dc > 1.0

    def test_two_identical_points(self):
        ps = PointSet(points=np.array([[1.0, 1.0], [1.0, 1.0]]))
        dm = pairwise_distance(ps)
        dc = resolve_dc(dm, DcSpec("max-rho-percent", 50))
        assert dc > 0.0
        assert naive_rho(dm, dc).max() >= 1

    def test_unreachable_target(self):
        dm = pairwise_distance(PointSet(points=np.array([[0.0], [1.0], [2.0]])))
        with pytest.raises(DcResolutionError, match="max achievable"):
            resolve_dc(dm, DcSpec("max-rho-percent", 100))

    def test_oracle_equivalence_random(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            n = int(rng.integers(4, 40))
            dm = pairwise_distance(PointSet(points=rng.uniform(0, 10, size=(n, 2))))
            for pct in (10, 30, 60):
                expected = _oracle_max_rho_dc(dm, pct)
                if expected is None:
                    continue
                assert resolve_dc(dm, DcSpec("max-rho-percent", pct)) == expected

    def test_monotone_in_percentage(self):
        rng = np.random.default_rng(4)
        dm = pairwise_distance(PointSet(points=rng.uniform(0, 10, size=(50, 2))))
        values = [resolve_dc(dm, DcSpec("max-rho-percent", p)) for p in (5, 10, 20, 40, 80)]
        assert values == sorted(values)

    def test_avg_neighbor_mode(self):
        rng = np.random.default_rng(5)
        dm = pairwise_distance(PointSet(points=rng.uniform(0, 10, size=(30, 2))))
        dc = resolve_dc(dm, DcSpec("avg-neighbor-percent", 10))
        n = dm.shape[0]
        assert naive_rho(dm, dc).mean() >= 0.10 * n
        # smallest such candidate: one step below must miss the target
        smaller = sorted(set(dm[np.triu_indices(n, 1)].tolist()))
        below = [np.nextafter(c, np.inf) for c in smaller if np.nextafter(c, np.inf) < dc]
        if below:
            assert naive_rho(dm, below[-1]).mean() < 0.10 * n

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            DcSpec("max-rho-percent", 0)
        with pytest.raises(ValueError):
            DcSpec("absolute", -1)
        with pytest.raises(ValueError):
            DcSpec("bogus", 5)


class TestPointSet:
    def test_rejects_misaligned_labels(self):
        with pytest.raises(ValueError):
            PointSet(points=np.zeros((3, 2)), truth_labels=np.array([1, 2]))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            PointSet(points=np.zeros((0, 2)))
