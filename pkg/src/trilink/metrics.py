"""Triangle counts and clustering coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from . import _rng
from .graph import Graph

__all__ = [
    "ClusteringReport",
    "local_clustering",
    "average_clustering",
    "node_triangles",
    "triangle_count",
    "graph_stats",
]


@njit(cache=True)
def _triangles_of(indptr, indices, nodes, mark):
    # triangles at u = edges among u's neighbors; mark holds u+1 on Γ(u)
    out = np.zeros(nodes.size, dtype=np.int64)
    for t in range(nodes.size):
        u = nodes[t]
        stamp = u + 1
        a, b = indptr[u], indptr[u + 1]
        if b - a < 2:
            continue
        for p in range(a, b):
            mark[indices[p]] = stamp
        c = 0
        for p in range(a, b):
            v = indices[p]
            for q in range(indptr[v], indptr[v + 1]):
                w = indices[q]
                if w > v and mark[w] == stamp:
                    c += 1
        out[t] = c
    return out


def node_triangles(g: Graph, nodes: np.ndarray | None = None) -> np.ndarray:
    """Number of triangles through each node of ``nodes`` (default: all nodes)."""
    if nodes is None:
        nodes = np.arange(g.node_count, dtype=np.int64)
    nodes = np.ascontiguousarray(nodes, dtype=np.int64)
    mark = np.zeros(g.node_count, dtype=np.int64)
    return _triangles_of(g.indptr, g.indices, nodes, mark)


def triangle_count(g: Graph) -> int:
    return int(node_triangles(g).sum() // 3)


def _local_from_triangles(tri: np.ndarray, k: np.ndarray) -> np.ndarray:
    k = k.astype(np.float64)
    denom = k * (k - 1.0)
    c = np.zeros(tri.size, dtype=np.float64)
    ok = denom > 0
    c[ok] = 2.0 * tri[ok] / denom[ok]
    return c


def local_clustering(g: Graph, i: int) -> float:
    """Fraction of node ``i``'s neighbor pairs that are adjacent; 0 when ``k_i < 2``."""
    g._check(i)
    tri = node_triangles(g, np.array([i]))
    return float(_local_from_triangles(tri, g.degrees[[i]])[0])


@dataclass(frozen=True)
class ClusteringReport:
    average: float
    node_count_used: int
    mode: str = "exact"
    sample_size: int | None = None
    seed: int | None = None
    per_node: np.ndarray | None = None


def average_clustering(
    g: Graph,
    sample_size: int | None = None,
    seed: int = 0,
    keep_per_node: bool = False,
) -> ClusteringReport:
    """Mean local clustering over all nodes, or over a uniform node sample.

    Isolated and degree-1 nodes contribute 0 to the mean. The sum uses
    ``math.fsum``, so the result does not depend on node order.
    """
    n = g.node_count
    if sample_size is None:
        nodes = np.arange(n, dtype=np.int64)
    else:
        if not 1 <= sample_size <= n:
            raise ValueError(f"sample size must be in [1, {n}], got {sample_size}")
        nodes = _rng.stream(seed, _rng.CLUSTER_SAMPLE).choice(n, size=sample_size, replace=False)
    if nodes.size == 0:
        return ClusteringReport(average=0.0, node_count_used=0)
    c = _local_from_triangles(node_triangles(g, nodes), g.degrees[nodes])
    avg = math.fsum(c) / nodes.size
    if sample_size is None:
        return ClusteringReport(avg, n, per_node=c if keep_per_node else None)
    return ClusteringReport(
        avg, int(nodes.size), mode="sampled", sample_size=int(sample_size), seed=int(seed),
        per_node=c if keep_per_node else None,
    )


def graph_stats(g: Graph, sample_size: int | None = None, seed: int = 0) -> dict:
    rep = average_clustering(g, sample_size=sample_size, seed=seed)
    return {
        "n": g.node_count,
        "e": g.edge_count,
        "avcc": rep.average,
        "avcc_mode": rep.mode,
        "avcc_nodes": rep.node_count_used,
        "triangles": triangle_count(g),
        "max_degree": int(g.degrees.max()) if g.node_count else 0,
    }
