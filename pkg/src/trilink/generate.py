"""Scale-free graphs with tunable triangle density.

A Barabási–Albert tree (one edge per arriving node) is grown first. Densification
then walks the nodes in ascending id order and, for every neighbor ``z`` of node
``i``, flips a coin with probability ``d``. On success it draws one of ``z``'s
neighbors ``j`` with weight ``|K(i) - K(j)| + epsilon`` and adds ``(i, j)``
unless ``j`` is ``i`` or already adjacent to it. Every added edge closes the
triangle ``i, z, j``, and the degree-difference weighting keeps hubs attracting
new links, so the degree distribution stays heavy-tailed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from . import _rng
from .graph import Graph, build

__all__ = [
    "GeneratorConfig",
    "generate_ba_tree",
    "select_triangle_partner",
    "densify",
    "generate_graph",
]


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    d: float
    epsilon: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not 0.0 <= self.d <= 1.0:
            raise ValueError(f"d must be in [0, 1], got {self.d}")
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be > 0, got {self.epsilon}")
        _rng.check_seed(self.seed)


@njit(cache=True)
def _ba_tree_parents(n, rng):
    # ends lists every edge endpoint, so a uniform draw from it picks node i
    # with probability k_i / sum_j k_j
    parent = np.empty(n, dtype=np.int64)
    parent[0] = -1
    parent[1] = 0
    ends = np.empty(2 * (n - 1), dtype=np.int64)
    ends[0] = 0
    ends[1] = 1
    m = 2
    for t in range(2, n):
        target = ends[rng.integers(0, m)]
        parent[t] = target
        ends[m] = t
        ends[m + 1] = target
        m += 2
    return parent


def generate_ba_tree(n: int, seed: int) -> Graph:
    """Preferential-attachment tree on ``n`` nodes seeded from the edge ``(0, 1)``."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    parent = _ba_tree_parents(int(n), _rng.stream(seed, _rng.TREE))
    child = np.arange(1, n, dtype=np.int64)
    return build(n, np.stack([parent[1:], child], axis=1))


@njit(cache=True)
def _pick_partner(cands, n_cands, degree, ki, eps, rng):
    if n_cands == 0:
        return -1
    total = 0.0
    for t in range(n_cands):
        total += abs(ki - degree[cands[t]]) + eps
    r = rng.random() * total
    acc = 0.0
    for t in range(n_cands):
        acc += abs(ki - degree[cands[t]]) + eps
        if r < acc:
            return cands[t]
    return cands[n_cands - 1]


def select_triangle_partner(
    g: Graph, i: int, z: int, epsilon: float, rng: np.random.Generator
) -> int | None:
    """Draw a neighbor of ``z`` to link with ``i``, or ``None``.

    Every member ``j`` of ``z``'s neighborhood, ``i`` included, is weighted by
    ``|K(i) - K(j)| + epsilon``. A draw that lands on ``i`` or on a node already
    adjacent to ``i`` yields ``None``, since the edge would not be new. Hence
    ``None`` is certain when no neighbor of ``z`` is eligible.
    """
    if not g.has_edge(i, z):
        raise ValueError(f"z={z} is not a neighbor of i={i}")
    cands = np.ascontiguousarray(g.neighbors(z))
    j = int(_pick_partner(cands, cands.size, g.degrees, np.int64(g.degree(i)), float(epsilon), rng))
    if j == i or g.has_edge(i, j):
        return None
    return j


@njit(cache=True)
def _densify_kernel(n, edges, d, eps, rng):
    # adjacency as singly linked half-edges: half-edge h points to[h], next is nxt[h]
    cap = 2 * edges.shape[0] + 16
    head = np.full(n, -1, dtype=np.int64)
    to = np.empty(cap, dtype=np.int64)
    nxt = np.empty(cap, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    h = 0
    for e in range(edges.shape[0]):
        u = edges[e, 0]
        v = edges[e, 1]
        to[h] = v
        nxt[h] = head[u]
        head[u] = h
        to[h + 1] = u
        nxt[h + 1] = head[v]
        head[v] = h + 1
        h += 2
        deg[u] += 1
        deg[v] += 1

    mark = np.zeros(n, dtype=np.int64)
    snap = np.empty(n, dtype=np.int64)
    cands = np.empty(n, dtype=np.int64)
    for i in range(n):
        stamp = i + 1
        ks = 0
        p = head[i]
        while p != -1:
            snap[ks] = to[p]
            mark[to[p]] = stamp
            ks += 1
            p = nxt[p]
        mark[i] = stamp
        for s in range(ks):
            if not rng.random() < d:
                continue
            z = snap[s]
            nc = 0
            p = head[z]
            while p != -1:
                cands[nc] = to[p]
                nc += 1
                p = nxt[p]
            j = _pick_partner(cands, nc, deg, deg[i], eps, rng)
            if mark[j] == stamp:
                continue
            if h + 2 > cap:
                cap *= 2
                to2 = np.empty(cap, dtype=np.int64)
                nxt2 = np.empty(cap, dtype=np.int64)
                to2[:h] = to[:h]
                nxt2[:h] = nxt[:h]
                to = to2
                nxt = nxt2
            to[h] = j
            nxt[h] = head[i]
            head[i] = h
            to[h + 1] = i
            nxt[h + 1] = head[j]
            head[j] = h + 1
            h += 2
            deg[i] += 1
            deg[j] += 1
            mark[j] = stamp

    out = np.empty((h // 2, 2), dtype=np.int64)
    for e in range(h // 2):
        out[e, 0] = to[2 * e + 1]
        out[e, 1] = to[2 * e]
    return out


def densify(tree: Graph, cfg: GeneratorConfig) -> Graph:
    """Add triangle-closing edges to ``tree`` with per-neighbor probability ``cfg.d``.

    Each node ``i`` iterates over the neighbors it had when its turn began;
    degrees are read live, so edges added earlier in the pass shift later weights.
    """
    if tree.node_count != cfg.n:
        raise ValueError(f"graph has {tree.node_count} nodes but cfg.n={cfg.n}")
    if cfg.d == 0.0:
        return tree
    edges = np.ascontiguousarray(tree.edges())
    out = _densify_kernel(
        cfg.n, edges, float(cfg.d), float(cfg.epsilon), _rng.stream(cfg.seed, _rng.DENSIFY)
    )
    return build(cfg.n, out)


def generate_graph(cfg: GeneratorConfig) -> Graph:
    """BA tree followed by densification, both seeded from ``cfg.seed``."""
    return densify(generate_ba_tree(cfg.n, cfg.seed), cfg)
