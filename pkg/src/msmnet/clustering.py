"""Empirical clustering estimators on realized graphs.

Local clustering of a node is the fraction of closed wedges centred on it;
it is well defined only for degree >= 2. Nodes of degree 0 or 1 are either
excluded from averages or counted as zeros, depending on the convention.
The per-degree clustering function never includes degrees below 2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph


class Convention(Enum):
    """Treatment of degree-0/1 nodes in node-averaged clustering."""

    EXCLUDE_LOW_DEGREE = "exclude"
    ZERO_LOW_DEGREE = "zero"


@dataclass(frozen=True)
class NodeClustering:
    node: int
    degree: int
    triangles: int
    c: float | None


@dataclass(frozen=True)
class ClusteringProfile:
    """Per-degree node counts and mean clustering, degrees >= 2 only."""

    n: int
    per_degree: dict[int, tuple[int, float]]
    convention: Convention = Convention.EXCLUDE_LOW_DEGREE

    @property
    def empty(self) -> bool:
        return not self.per_degree

    def degrees(self) -> list[int]:
        return sorted(self.per_degree)


def triangle_count(graph: Graph, v: int) -> int:
    """Number of triangles containing node v."""
    return int(graph.triangle_counts()[v])


def local_clustering(graph: Graph, v: int, convention: Convention) -> float | None:
    """Fraction of closed wedges at v; None or 0 below degree 2 per convention."""
    d = int(graph.degree[v])
    if d < 2:
        return None if convention is Convention.EXCLUDE_LOW_DEGREE else 0.0
    return triangle_count(graph, v) / (d * (d - 1) / 2)


def node_clustering(graph: Graph, v: int, convention: Convention) -> NodeClustering:
    d = int(graph.degree[v])
    return NodeClustering(
        node=v,
        degree=d,
        triangles=triangle_count(graph, v),
        c=local_clustering(graph, v, convention),
    )


def _per_node_values(graph: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # (included node ids, their degrees, their clustering values), degree >= 2 only
    deg = graph.degree
    sel = np.flatnonzero(deg >= 2)
    d = deg[sel].astype(np.float64)
    tri = graph.triangle_counts()[sel].astype(np.float64)
    c = tri / (d * (d - 1.0) / 2.0)
    return sel, deg[sel], c


def empirical_clustering_function(graph: Graph) -> ClusteringProfile:
    """Mean local clustering per degree k >= 2, with node counts N_k."""
    sel, degs, c = _per_node_values(graph)
    if sel.size == 0:
        warnings.warn("no node with degree >= 2: empty clustering profile")
        return ClusteringProfile(n=graph.n, per_degree={})
    per_degree: dict[int, tuple[int, float]] = {}
    for k in np.unique(degs):
        mask = degs == k
        per_degree[int(k)] = (int(mask.sum()), float(c[mask].mean()))
    return ClusteringProfile(n=graph.n, per_degree=per_degree)


def average_clustering(graph: Graph, convention: Convention) -> float:
    """Node-averaged local clustering under the given low-degree convention."""
    sel, _, c = _per_node_values(graph)
    if convention is Convention.EXCLUDE_LOW_DEGREE:
        if sel.size == 0:
            warnings.warn("no node with degree >= 2: average clustering undefined")
            return math.nan
        return float(c.mean())
    return float(c.sum() / graph.n)


def global_clustering(graph: Graph) -> float:
    """Transitivity: 3 * triangles / wedges over the whole graph."""
    d = graph.degree.astype(np.float64)
    wedges = float((d * (d - 1.0) / 2.0).sum())
    if wedges == 0.0:
        warnings.warn("graph has no wedge: global clustering undefined")
        return math.nan
    closed = float(graph.triangle_counts().sum())  # each triangle credited at 3 nodes
    return closed / wedges


def reduced_degree(k: int, n: int) -> float:
    """Degree rescaled by sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return k / math.sqrt(n)
