"""Immutable undirected simple graph in compressed sparse row form.

Node ids are dense integers ``0..N-1``. Adjacency lists are sorted, so edge
membership is a binary search and neighborhood intersection is a linear merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

__all__ = [
    "Graph",
    "BuildStats",
    "build",
    "build_with_stats",
    "edge_keys",
]


@dataclass(frozen=True)
class BuildStats:
    raw_edges: int
    self_loops: int
    duplicates: int


def edge_keys(u: np.ndarray, v: np.ndarray, n: int) -> np.ndarray:
    """Encode unordered pairs as ``min * n + max`` int64 keys."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    return np.minimum(u, v) * np.int64(n) + np.maximum(u, v)


@njit(cache=True)
def _sorted_intersection_size(a, b):
    i = 0
    j = 0
    c = 0
    while i < a.size and j < b.size:
        x = a[i]
        y = b[j]
        if x == y:
            c += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return c


@njit(cache=True)
def _pair_common_counts(indptr, indices, us, vs):
    out = np.empty(us.size, dtype=np.int64)
    for t in range(us.size):
        u = us[t]
        v = vs[t]
        out[t] = _sorted_intersection_size(
            indices[indptr[u]:indptr[u + 1]], indices[indptr[v]:indptr[v + 1]]
        )
    return out


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Graph:
    """Undirected simple graph over nodes ``0..node_count-1``.

    Construct with :func:`build`; the arrays are frozen after construction.
    """

    __slots__ = ("_n", "_indptr", "_indices", "_degrees", "_keys")

    def __init__(self, node_count: int, indptr: np.ndarray, indices: np.ndarray):
        self._n = int(node_count)
        self._indptr = _readonly(indptr)
        self._indices = _readonly(indices)
        self._degrees = _readonly(np.diff(indptr))
        self._keys = None

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return int(self._indices.size // 2)

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def degree(self, i: int) -> int:
        self._check(i)
        return int(self._degrees[i])

    def neighbors(self, i: int) -> np.ndarray:
        self._check(i)
        return self._indices[self._indptr[i]:self._indptr[i + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if u == v:
            return False
        nb = self._indices[self._indptr[u]:self._indptr[u + 1]]
        pos = np.searchsorted(nb, v)
        return bool(pos < nb.size and nb[pos] == v)

    def common_neighbor_count(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        return int(_sorted_intersection_size(self.neighbors(u), self.neighbors(v)))

    def edges(self) -> np.ndarray:
        """All edges as an ``(E, 2)`` array with ``u < v``, lexicographically sorted."""
        src = np.repeat(np.arange(self._n, dtype=np.int64), self._degrees)
        mask = src < self._indices
        return np.stack([src[mask], self._indices[mask]], axis=1)

    def edge_key_index(self) -> np.ndarray:
        """Sorted int64 keys of all edges, for vectorized membership tests."""
        if self._keys is None:
            e = self.edges()
            keys = e[:, 0] * np.int64(self._n) + e[:, 1]
            # lexicographic edge order already yields sorted keys
            self._keys = _readonly(keys)
        return self._keys

    def contains_pairs(self, pairs: np.ndarray) -> np.ndarray:
        """Vectorized ``has_edge`` over an ``(M, 2)`` array of pairs."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        keys = self.edge_key_index()
        if keys.size == 0:
            return np.zeros(len(pairs), dtype=bool)
        q = edge_keys(pairs[:, 0], pairs[:, 1], self._n)
        pos = np.searchsorted(keys, q)
        pos[pos == keys.size] = 0
        return (keys[pos] == q) & (pairs[:, 0] != pairs[:, 1])

    def common_neighbor_counts(self, pairs: np.ndarray) -> np.ndarray:
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        return _pair_common_counts(
            self._indptr, self._indices,
            np.ascontiguousarray(pairs[:, 0]), np.ascontiguousarray(pairs[:, 1]),
        )

    def _check(self, i: int) -> None:
        if not 0 <= i < self._n:
            raise IndexError(f"node id {i} out of range [0, {self._n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._indptr, other._indptr)
            and np.array_equal(self._indices, other._indices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(N={self._n}, E={self.edge_count})"


def build_with_stats(
    node_count: int, edge_list: Sequence[tuple[int, int]] | np.ndarray | Iterable
) -> tuple[Graph, BuildStats]:
    """Build a graph, dropping self-loops and collapsing duplicate pairs.

    Reversed duplicates such as ``(0, 1)`` and ``(1, 0)`` count as duplicates.
    """
    n = int(node_count)
    if n < 0:
        raise ValueError(f"node_count must be >= 0, got {n}")
    if isinstance(edge_list, np.ndarray):
        arr = edge_list
    else:
        arr = np.asarray(list(edge_list), dtype=np.int64)
    if arr.size == 0:
        arr = np.empty((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"edge_list must have shape (E, 2), got {arr.shape}")
    arr = arr.astype(np.int64, copy=False)
    bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
    if bad.size:
        k = int(bad[0])
        raise ValueError(
            f"edge index {k} ({arr[k, 0]}, {arr[k, 1]}) has node id out of range [0, {n})"
        )
    raw = len(arr)
    loops = arr[:, 0] == arr[:, 1]
    arr = arr[~loops]
    keys = np.unique(edge_keys(arr[:, 0], arr[:, 1], max(n, 1)))
    stats = BuildStats(raw_edges=raw, self_loops=int(loops.sum()), duplicates=len(arr) - keys.size)

    u = keys // max(n, 1)
    v = keys % max(n, 1)
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    indices = dst[order].astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, indices), stats


def build(node_count: int, edge_list) -> Graph:
    return build_with_stats(node_count, edge_list)[0]
