"""Clustering estimator tests, including the dense brute-force oracle."""

import math

import numpy as np
import pytest

from msmnet.clustering import (
    Convention,
    average_clustering,
    empirical_clustering_function,
    global_clustering,
    local_clustering,
    reduced_degree,
    triangle_count,
)
from msmnet.graph import Graph


def make_graph(n, pairs):
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    return Graph.from_edge_list(n, pairs[:, 0], pairs[:, 1])


def random_graph(n, p, rng):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, pairs) if pairs else Graph.from_edge_list(
        n, np.empty(0, np.int64), np.empty(0, np.int64)
    )


def dense_adjacency(graph):
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    a[graph.edges_u, graph.edges_v] = 1
    a[graph.edges_v, graph.edges_u] = 1
    return a


def brute_force_stats(graph):
    """O(n^3) oracle via the cubed adjacency matrix."""
    a = dense_adjacency(graph)
    tri = np.diag(a @ a @ a) // 2
    deg = a.sum(axis=1)
    wedges = deg * (deg - 1) // 2
    return deg, tri, wedges


TRIANGLE = [(0, 1), (1, 2), (0, 2)]
PATH3 = [(0, 1), (1, 2)]
PATH4 = [(0, 1), (1, 2), (2, 3)]
K4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
STAR4 = [(0, 1), (0, 2), (0, 3)]


class TestTriangleCount:
    def test_triangle(self):
        g = make_graph(3, TRIANGLE)
        for v in range(3):
            assert triangle_count(g, v) == 1

    def test_path_center(self):
        assert triangle_count(make_graph(3, PATH3), 1) == 0

    def test_small_random_vs_brute_force(self):
        rng = np.random.default_rng(5)
        g = random_graph(5, 0.6, rng)
        _, tri, _ = brute_force_stats(g)
        for v in range(5):
            assert triangle_count(g, v) == tri[v]


class TestLocalClustering:
    def test_complete_graph(self):
        g = make_graph(4, K4)
        for v in range(4):
            assert local_clustering(g, v, Convention.EXCLUDE_LOW_DEGREE) == 1.0

    def test_star_center(self):
        g = make_graph(4, STAR4)
        assert local_clustering(g, 0, Convention.EXCLUDE_LOW_DEGREE) == 0.0

    def test_degree_one_conventions(self):
        g = make_graph(4, STAR4)
        assert local_clustering(g, 1, Convention.EXCLUDE_LOW_DEGREE) is None
        assert local_clustering(g, 1, Convention.ZERO_LOW_DEGREE) == 0.0


class TestEmpiricalClusteringFunction:
    def test_triangle(self):
        profile = empirical_clustering_function(make_graph(3, TRIANGLE))
        assert profile.per_degree == {2: (3, 1.0)}

    def test_path4(self):
        profile = empirical_clustering_function(make_graph(4, PATH4))
        assert profile.per_degree == {2: (2, 0.0)}

    def test_partition_identity(self):
        rng = np.random.default_rng(8)
        g = random_graph(30, 0.2, rng)
        profile = empirical_clustering_function(g)
        stored = sum(count for count, _ in profile.per_degree.values())
        assert stored == int((g.degree >= 2).sum())
        assert min(profile.degrees()) >= 2

    def test_empty_profile_flagged(self):
        g = make_graph(4, [(0, 1)])
        with pytest.warns(UserWarning):
            profile = empirical_clustering_function(g)
        assert profile.empty


class TestAverageClustering:
    def test_complete_graph_both_conventions(self):
        g = make_graph(4, K4)
        assert average_clustering(g, Convention.EXCLUDE_LOW_DEGREE) == 1.0
        assert average_clustering(g, Convention.ZERO_LOW_DEGREE) == 1.0

    def test_star(self):
        g = make_graph(4, STAR4)
        assert average_clustering(g, Convention.EXCLUDE_LOW_DEGREE) == 0.0
        assert average_clustering(g, Convention.ZERO_LOW_DEGREE) == 0.0

    def test_triangle_plus_isolated(self):
        g = make_graph(4, TRIANGLE)
        assert average_clustering(g, Convention.EXCLUDE_LOW_DEGREE) == 1.0
        assert average_clustering(g, Convention.ZERO_LOW_DEGREE) == 0.75

    def test_convention_identity_exact(self):
        rng = np.random.default_rng(12)
        for _ in range(20):
            g = random_graph(25, rng.uniform(0.05, 0.5), rng)
            if not (g.degree >= 2).any():
                continue
            excl = average_clustering(g, Convention.EXCLUDE_LOW_DEGREE)
            incl = average_clustering(g, Convention.ZERO_LOW_DEGREE)
            share = (g.degree >= 2).sum() / g.n
            assert incl == pytest.approx(excl * share, abs=1e-15)

    def test_undefined_flagged(self):
        g = make_graph(3, [(0, 1)])
        with pytest.warns(UserWarning):
            assert math.isnan(average_clustering(g, Convention.EXCLUDE_LOW_DEGREE))


class TestGlobalClustering:
    def test_triangle(self):
        assert global_clustering(make_graph(3, TRIANGLE)) == 1.0

    def test_star(self):
        assert global_clustering(make_graph(4, STAR4)) == 0.0

    def test_no_wedge_flagged(self):
        with pytest.warns(UserWarning):
            assert math.isnan(global_clustering(make_graph(2, [(0, 1)])))

    def test_vs_brute_force(self):
        rng = np.random.default_rng(3)
        g = random_graph(12, 0.3, rng)
        deg, tri, wedges = brute_force_stats(g)
        assert global_clustering(g) == pytest.approx(tri.sum() / wedges.sum(), rel=1e-14)


class TestBruteForceEquivalence:
    def test_200_random_graphs(self):
        rng = np.random.default_rng(2024)
        for trial in range(200):
            n = int(rng.integers(4, 13))
            g = random_graph(n, float(rng.uniform(0.05, 0.9)), rng)
            deg, tri, wedges = brute_force_stats(g)
            np.testing.assert_array_equal(g.degree, deg)
            for v in range(n):
                assert triangle_count(g, v) == tri[v], (trial, v)
                expected = tri[v] / wedges[v] if wedges[v] > 0 else None
                got = local_clustering(g, v, Convention.EXCLUDE_LOW_DEGREE)
                if expected is None:
                    assert got is None
                else:
                    assert got == pytest.approx(expected, rel=1e-14)
            profile = (
                empirical_clustering_function(g) if (deg >= 2).any() else None
            )
            if profile is not None:
                for k, (count, mean_c) in profile.per_degree.items():
                    sel = deg == k
                    oracle = np.mean(tri[sel] / wedges[sel])
                    assert count == sel.sum()
                    assert mean_c == pytest.approx(oracle, rel=1e-13)
                    assert 0.0 <= mean_c <= 1.0
            if wedges.sum() > 0:
                assert global_clustering(g) == pytest.approx(
                    tri.sum() / wedges.sum(), rel=1e-13
                )


class TestReducedDegree:
    def test_values(self):
        assert reduced_degree(100, 10_000) == 1.0
        assert reduced_degree(0, 50) == 0.0
        assert reduced_degree(50, 100) == 5.0

    def test_domain(self):
        with pytest.raises(ValueError):
            reduced_degree(3, 0)
