"""Held-out edge splits, negative sampling, sampled AUC and Hits@K."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _rng
from .graph import Graph, build, edge_keys

__all__ = [
    "EdgeSplit",
    "AucResult",
    "HitsResult",
    "split_edges",
    "split_from_positives",
    "sample_negatives",
    "auc",
    "auc_from_scores",
    "hits_at_k",
    "hits_from_scores",
    "TIE_RTOL",
]

PairScorer = Callable[[Graph, np.ndarray], np.ndarray]

# relative tolerance under which two scores count as tied
TIE_RTOL = 1e-12
# graphs this small are handled by enumerating non-edges instead of rejection
_ENUMERATE_PAIRS = 2_000_000
_MAX_DENSITY = 0.99


@dataclass(frozen=True)
class EdgeSplit:
    """Observed edges partitioned into a training graph and held-out positives.

    ``observed`` is the union of both parts; negatives are drawn against it so
    no held-out edge can ever be sampled as a non-edge.
    """

    train_graph: Graph
    positives: np.ndarray
    ratio: float
    seed: int | None
    observed: Graph


@dataclass(frozen=True)
class AucResult:
    m: int
    m_strict: int
    m_tie: int
    auc: float

    @classmethod
    def from_counts(cls, m: int, m_strict: int, m_tie: int) -> "AucResult":
        if m < 1 or m_strict < 0 or m_tie < 0 or m_strict + m_tie > m:
            raise ValueError(f"inconsistent counts m={m} m'={m_strict} m''={m_tie}")
        return cls(m, m_strict, m_tie, (m_strict + 0.5 * m_tie) / m)


@dataclass(frozen=True)
class HitsResult:
    k: int
    hits: float


def split_edges(g: Graph, ratio: float, seed: int) -> EdgeSplit:
    """Hold out ``ceil(ratio * |E|)`` uniformly chosen edges as positives."""
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must be in (0, 1), got {ratio}")
    e = g.edges()
    n_pos = math.ceil(ratio * len(e) - 1e-9)
    if n_pos < 1 or n_pos >= len(e):
        raise ValueError(
            f"ratio {ratio} on {len(e)} edges leaves an empty training or held-out set"
        )
    perm = _rng.stream(seed, _rng.SPLIT).permutation(len(e))
    pos = e[np.sort(perm[:n_pos])]
    train = build(g.node_count, e[np.sort(perm[n_pos:])])
    return EdgeSplit(train, pos, float(ratio), int(seed), g)


def split_from_positives(train: Graph, positives: np.ndarray) -> EdgeSplit:
    """Wrap an externally supplied held-out set.

    Any positive that also appears in ``train`` is removed from the training
    graph so scores never see it.
    """
    pos = np.asarray(positives, dtype=np.int64).reshape(-1, 2)
    if len(pos) == 0:
        raise ValueError("no positive edges supplied")
    pos = np.sort(pos, axis=1)
    n = train.node_count
    if (pos < 0).any() or (pos >= n).any():
        raise ValueError(f"positive pair outside node range [0, {n})")
    if (pos[:, 0] == pos[:, 1]).any():
        raise ValueError("positive edges must not be self-pairs")
    te = train.edges()
    leak = np.isin(edge_keys(te[:, 0], te[:, 1], n), edge_keys(pos[:, 0], pos[:, 1], n))
    if leak.any():
        train = build(n, te[~leak])
    observed = build(n, np.concatenate([train.edges(), pos]))
    ratio = len(pos) / max(observed.edge_count, 1)
    return EdgeSplit(train, pos, ratio, None, observed)


def sample_negatives(g: Graph, count: int, seed: int) -> np.ndarray:
    """Draw ``count`` non-adjacent node pairs uniformly, with replacement.

    Returns an ``(count, 2)`` array with ``u < v`` in each row.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    n = g.node_count
    total = n * (n - 1) // 2
    free = total - g.edge_count
    if free <= 0:
        raise ValueError(f"graph on {n} nodes is complete; it has no non-edges to sample")
    rng = _rng.stream(seed, _rng.NEGATIVES)
    density = g.edge_count / total

    if total <= _ENUMERATE_PAIRS and density > 0.5:
        iu, iv = np.triu_indices(n, 1)
        cand = np.stack([iu, iv], axis=1).astype(np.int64)
        cand = cand[~g.contains_pairs(cand)]
        return cand[rng.integers(0, len(cand), count)]
    if density > _MAX_DENSITY:
        raise ValueError(
            f"graph density {density:.4f} exceeds {_MAX_DENSITY}; rejection sampling would "
            f"stall ({free} non-edges among {total} pairs)"
        )

    out = np.empty((count, 2), dtype=np.int64)
    filled = 0
    for _ in range(10_000):
        need = count - filled
        batch = int(need / (1.0 - density) * 1.1) + 16
        u = rng.integers(0, n, batch)
        v = rng.integers(0, n, batch)
        pairs = np.stack([np.minimum(u, v), np.maximum(u, v)], axis=1)
        pairs = pairs[(u != v) & ~g.contains_pairs(pairs)][:need]
        out[filled:filled + len(pairs)] = pairs
        filled += len(pairs)
        if filled == count:
            return out
    raise RuntimeError(f"negative sampling stalled after drawing {filled} of {count} pairs")


def auc_from_scores(pos_scores: np.ndarray, neg_scores: np.ndarray) -> AucResult:
    """Paired comparisons: row ``t`` compares positive ``t`` against negative ``t``."""
    a = np.asarray(pos_scores, dtype=np.float64)
    b = np.asarray(neg_scores, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1 or a.size == 0:
        raise ValueError("need two equal-length, non-empty 1-d score arrays")
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    tie = np.abs(a - b) <= TIE_RTOL * scale
    strict = (a > b) & ~tie
    return AucResult.from_counts(a.size, int(strict.sum()), int(tie.sum()))


def auc(
    scorer: PairScorer,
    split: EdgeSplit,
    m: int,
    seed: int,
    negatives: np.ndarray | None = None,
) -> AucResult:
    """Sampled AUC from ``m`` positive-versus-negative comparisons.

    Positives are drawn uniformly from ``split.positives``; negatives come from
    ``sample_negatives`` on the observed graph, or uniformly from ``negatives``
    when an explicit list is supplied. Scores are computed on the training graph.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if len(split.positives) == 0:
        raise ValueError("split has no positive edges")
    pos = split.positives[_rng.stream(seed, _rng.AUC_POSITIVES).integers(0, len(split.positives), m)]
    if negatives is None:
        neg = sample_negatives(split.observed, m, _rng.child_seed(seed, _rng.AUC_NEGATIVES))
    else:
        negatives = np.asarray(negatives, dtype=np.int64).reshape(-1, 2)
        if len(negatives) == 0:
            raise ValueError("empty negative list")
        neg = negatives[_rng.stream(seed, _rng.AUC_NEGATIVES).integers(0, len(negatives), m)]
    return auc_from_scores(scorer(split.train_graph, pos), scorer(split.train_graph, neg))


def hits_from_scores(pos_scores: np.ndarray, neg_scores: np.ndarray, k: int) -> HitsResult:
    """Fraction of positives scoring strictly above the k-th largest negative."""
    pos = np.asarray(pos_scores, dtype=np.float64)
    neg = np.asarray(neg_scores, dtype=np.float64)
    if not 1 <= k <= neg.size:
        raise ValueError(f"k must be in [1, {neg.size}], got {k}")
    if pos.size == 0:
        raise ValueError("no positive scores")
    threshold = np.partition(neg, neg.size - k)[neg.size - k]
    return HitsResult(int(k), float(np.count_nonzero(pos > threshold) / pos.size))


def hits_at_k(scorer: PairScorer, split: EdgeSplit, negatives: np.ndarray, k: int) -> HitsResult:
    negatives = np.asarray(negatives, dtype=np.int64).reshape(-1, 2)
    if k > len(negatives):
        raise ValueError(f"k={k} exceeds the {len(negatives)} available negatives")
    g = split.train_graph
    return hits_from_scores(scorer(g, split.positives), scorer(g, negatives), k)
