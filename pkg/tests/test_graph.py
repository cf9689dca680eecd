"""Graph sampler tests: scaling, probabilities, reproducibility, calibration."""

import math

import numpy as np
import pytest

from msmnet.graph import (
    Graph,
    connection_probability,
    degree_sequence,
    delta_n,
    read_edge_csv,
    sample_graph,
    write_edge_csv,
)
from msmnet.weights import WeightSource, WeightVector, sample_pareto


def make_graph(n, pairs):
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    return Graph.from_edge_list(n, pairs[:, 0], pairs[:, 1])


TRIANGLE = [(0, 1), (1, 2), (0, 2)]
PATH3 = [(0, 1), (1, 2)]


class TestDeltaN:
    def test_values(self):
        assert delta_n(10_000, 0.5) == pytest.approx(1e-8, rel=1e-12)
        assert delta_n(1, 0.7) == 1.0
        assert delta_n(1000, 0.5) == pytest.approx(1e-6, rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            delta_n(0, 0.5)


class TestConnectionProbability:
    def test_small_argument_precision(self):
        p = connection_probability(1.0, 1.0, 1e-8)
        assert p == pytest.approx(1e-8, rel=1e-6)
        # at the promised precision scale
        p = connection_probability(1.0, 1.0, 1e-12)
        assert p == pytest.approx(1e-12, rel=1e-9)

    def test_unit_point(self):
        assert connection_probability(1.0, 1.0, 1.0) == pytest.approx(
            1.0 - math.exp(-1.0), rel=1e-14
        )

    def test_monotone_in_weights(self):
        base = connection_probability(2.0, 3.0, 0.01)
        assert connection_probability(2.5, 3.0, 0.01) > base
        assert connection_probability(2.0, 3.5, 0.01) > base


class TestSampleGraph:
    def test_zero_delta_gives_empty_graph(self):
        w = WeightVector(np.ones(20), 0.5, WeightSource.PARETO)
        g = sample_graph(w, seed=1, delta=0.0)
        assert g.edge_count == 0
        assert g.degree.sum() == 0

    def test_near_certain_edge(self):
        # two nodes with delta*w1*w2 = 100: p within 1e-40 of 1
        w = WeightVector(np.array([10.0, 10.0]), 0.5, WeightSource.PARETO)
        hits = sum(
            sample_graph(w, seed=s, delta=1.0).edge_count for s in range(1000)
        )
        assert hits == 1000

    def test_reproducible(self):
        w = sample_pareto(0.5, 200, np.random.default_rng(9))
        g1 = sample_graph(w, seed=314)
        g2 = sample_graph(w, seed=314)
        np.testing.assert_array_equal(g1.edges_u, g2.edges_u)
        np.testing.assert_array_equal(g1.edges_v, g2.edges_v)
        g3 = sample_graph(w, seed=315)
        assert not (
            g3.edge_count == g1.edge_count
            and np.array_equal(g3.edges_u, g1.edges_u)
            and np.array_equal(g3.edges_v, g1.edges_v)
        )

    def test_single_node_accepted(self):
        w = WeightVector(np.array([5.0]), 0.5, WeightSource.PARETO)
        assert sample_graph(w, seed=0).edge_count == 0

    def test_pair_calibration(self):
        # n=50, all w=2, delta=0.01: per-pair frequency within 4 binomial SE
        n, redraws = 50, 10_000
        w = WeightVector(np.full(n, 2.0), 0.5, WeightSource.PARETO)
        p = connection_probability(2.0, 2.0, 0.01)
        counts = np.zeros((n, n))
        for s in range(redraws):
            g = sample_graph(w, seed=123_000 + s, delta=0.01)
            counts[g.edges_u, g.edges_v] += 1
        freq = counts[np.triu_indices(n, 1)] / redraws
        se = math.sqrt(p * (1.0 - p) / redraws)
        assert np.abs(freq - p).max() <= 4.0 * se


class TestDegreeSequence:
    def test_triangle(self):
        assert degree_sequence(make_graph(3, TRIANGLE)).tolist() == [2, 2, 2]

    def test_path(self):
        assert degree_sequence(make_graph(3, PATH3)).tolist() == [1, 2, 1]

    def test_handshake(self):
        w = sample_pareto(0.5, 300, np.random.default_rng(13))
        g = sample_graph(w, seed=99)
        assert g.degree.sum() == 2 * g.edge_count


class TestGraphStructure:
    def test_no_self_loops(self):
        with pytest.raises(ValueError):
            make_graph(3, [(0, 0)])

    def test_symmetric_adjacency(self):
        g = make_graph(4, [(2, 0), (1, 3)])
        assert g.has_edge(0, 2) and g.has_edge(2, 0)
        assert g.has_edge(1, 3) and not g.has_edge(0, 1)
        assert sorted(g.neighbors(0).tolist()) == [2]

    def test_neighbors_sorted(self):
        g = make_graph(5, [(0, 4), (0, 1), (0, 3)])
        assert g.neighbors(0).tolist() == [1, 3, 4]


def test_edge_csv_roundtrip(tmp_path):
    w = sample_pareto(0.5, 60, np.random.default_rng(17))
    g = sample_graph(w, seed=5)
    path = tmp_path / "edges.csv"
    write_edge_csv(g, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "u,v"
    back = read_edge_csv(path, n=60)
    np.testing.assert_array_equal(back.edges_u, g.edges_u)
    np.testing.assert_array_equal(back.edges_v, g.edges_v)
    assert np.all(g.edges_u < g.edges_v)
