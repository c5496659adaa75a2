import numpy as np
import pytest

from peakmerge.dataset import PointSet, pairwise_distance
from peakmerge.density import (
    compute_profile,
    decision_graph,
    delta_and_parent,
    density_order,
    local_density,
)

from .conftest import random_pointset
from .oracles import naive_delta_parent, naive_gamma, naive_order, naive_rho


class TestLocalDensity:
    def test_line_fixture(self, line_dm):
        assert local_density(line_dm, 1.5).tolist() == [1, 2, 2, 1, 0]

    def test_tiny_dc_all_zero(self):
        rng = np.random.default_rng(0)
        dm = pairwise_distance(PointSet(points=rng.uniform(0, 10, size=(12, 2))))
        tiny = dm[np.triu_indices(12, 1)].min() / 2
        assert local_density(dm, tiny).tolist() == [0] * 12

    def test_coincident_points(self):
        dm = pairwise_distance(PointSet(points=np.array([[2.0, 2.0], [2.0, 2.0]])))
        assert local_density(dm, 0.1).tolist() == [1, 1]

    def test_rejects_nonpositive_dc(self, line_dm):
        with pytest.raises(ValueError):
            local_density(line_dm, 0.0)


class TestDensityOrder:
    def test_line_fixture(self):
        assert density_order(np.array([1, 2, 2, 1, 0])).tolist() == [1, 2, 0, 3, 4]

    def test_all_equal_is_identity(self):
        assert density_order(np.array([3, 3, 3, 3])).tolist() == [0, 1, 2, 3]

    def test_singleton(self):
        assert density_order(np.array([5])).tolist() == [0]


class TestDeltaAndParent:
    def test_line_fixture(self, line_dm):
        order = np.array([1, 2, 0, 3, 4])
        delta, parent = delta_and_parent(line_dm, order)
        # order-first point 1 takes the max rule: delta = d(1, 10) = 9
        assert delta.tolist() == [1.0, 9.0, 1.0, 1.0, 7.0]
        assert parent.tolist() == [1, -1, 1, 2, 3]

    def test_singleton(self):
        delta, parent = delta_and_parent(np.zeros((1, 1)), np.array([0]))
        assert delta.tolist() == [0.0] and parent.tolist() == [-1]

    def test_two_points(self):
        dm = np.array([[0.0, 4.0], [4.0, 0.0]])
        delta, parent = delta_and_parent(dm, np.array([1, 0]))
        assert delta.tolist() == [4.0, 4.0]
        assert parent.tolist() == [1, -1]

    def test_oracle_equivalence_random(self):
        rng = np.random.default_rng(1)
        for _ in range(15):
            ps = random_pointset(rng)
            dm = pairwise_distance(ps)
            dc = np.quantile(dm[np.triu_indices(ps.n, 1)], 0.2) if ps.n > 1 else 1.0
            dc = max(dc, 1e-9)
            rho = local_density(dm, dc)
            assert np.array_equal(rho, naive_rho(dm, dc))
            order = density_order(rho)
            assert np.array_equal(order, naive_order(rho))
            delta, parent = delta_and_parent(dm, order)
            exp_delta, exp_parent = naive_delta_parent(dm, order)
            assert np.array_equal(parent, exp_parent)
            np.testing.assert_array_equal(delta, exp_delta)


class TestProfileInvariants:
    def test_forest_terminates_at_single_root(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            ps = random_pointset(rng)
            dm = pairwise_distance(ps)
            profile = compute_profile(dm, 1.0)
            roots = np.flatnonzero(profile.parent < 0)
            assert roots.tolist() == [int(profile.order[0])]
            pos = np.empty(ps.n, dtype=int)
            pos[profile.order] = np.arange(ps.n)
            for i in range(ps.n):
                seen = set()
                while profile.parent[i] >= 0:
                    assert i not in seen
                    seen.add(i)
                    # order position strictly decreases along parent chains
                    assert pos[profile.parent[i]] < pos[i]
                    i = int(profile.parent[i])
                assert i == int(profile.order[0])

    def test_delta_equals_parent_distance(self):
        rng = np.random.default_rng(3)
        ps = random_pointset(rng, n=40)
        dm = pairwise_distance(ps)
        profile = compute_profile(dm, 2.0)
        for i in range(ps.n):
            if profile.parent[i] >= 0:
                assert profile.delta[i] == dm[i, profile.parent[i]]
        root = int(profile.order[0])
        assert profile.delta[root] == dm[root].max()


class TestDecisionGraph:
    def test_endpoint_scaling(self):
        dg = decision_graph(np.array([0, 10]), np.array([0.0, 5.0]))
        assert dg.gamma.tolist() == [0.0, 1.0]

    def test_constant_rho_all_zero(self):
        dg = decision_graph(np.array([4, 4, 4]), np.array([1.0, 2.0, 3.0]))
        assert dg.gamma.tolist() == [0.0, 0.0, 0.0]

    def test_line_fixture_matches_recompute(self):
        rho = np.array([1, 2, 2, 1, 0])
        delta = np.array([1.0, 9.0, 1.0, 1.0, 7.0])
        dg = decision_graph(rho, delta)
        np.testing.assert_allclose(dg.gamma, naive_gamma(rho, delta), rtol=1e-12)
        assert int(np.argmax(dg.gamma)) == 1

    def test_gamma_in_unit_interval(self):
        rng = np.random.default_rng(4)
        dg = decision_graph(rng.integers(0, 50, 30), rng.uniform(0, 9, 30))
        assert np.all((dg.gamma >= 0) & (dg.gamma <= 1))

    def test_records_sorted_by_gamma(self):
        dg = decision_graph(np.array([1, 2, 2, 1, 0]), np.array([1.0, 9.0, 1.0, 1.0, 7.0]))
        recs = dg.records_by_gamma()
        assert len(recs) == 5
        gammas = [r["gamma"] for r in recs]
        assert gammas == sorted(gammas, reverse=True)
