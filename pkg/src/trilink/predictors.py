"""Topology-only link scores.

Degree-dependent scores look only at endpoint degrees: HEI grows with the
degree gap, HOI shrinks with it. Neighborhood scores (Jaccard, common
neighbors) count shared neighbors and are blind on triangle-free graphs.

Each score has a scalar form for single pairs and a vectorized form used by
the evaluators; :class:`Scorer` wraps the vectorized forms behind one call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph

__all__ = [
    "ScoreParams",
    "Method",
    "Scorer",
    "score_hei",
    "score_hoi",
    "score_jaccard",
    "score_common_neighbors",
    "score_pairs",
]


@dataclass(frozen=True)
class ScoreParams:
    alpha: float = 0.5
    hoi_epsilon: float = 1e-9

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if not self.hoi_epsilon > 0.0:
            raise ValueError(f"hoi_epsilon must be > 0, got {self.hoi_epsilon}")


class Method(str, enum.Enum):
    HEI = "hei"
    HOI = "hoi"
    JAC = "jac"
    CN = "cn"

    @property
    def degree_dependent(self) -> bool:
        return self in (Method.HEI, Method.HOI)


def _pair_check(g: Graph, i: int, j: int) -> None:
    g._check(i)
    g._check(j)
    if i == j:
        raise ValueError(f"cannot score a node against itself (i = j = {i})")


def score_hei(g: Graph, i: int, j: int, p: ScoreParams = ScoreParams()) -> float:
    _pair_check(g, i, j)
    return float(abs(g.degree(i) - g.degree(j)) ** p.alpha)


def score_hoi(g: Graph, i: int, j: int, p: ScoreParams = ScoreParams()) -> float:
    # epsilon keeps equal-degree pairs finite; they all share the top score
    _pair_check(g, i, j)
    return float(1.0 / (abs(g.degree(i) - g.degree(j)) + p.hoi_epsilon) ** p.alpha)


def score_jaccard(g: Graph, i: int, j: int) -> float:
    _pair_check(g, i, j)
    cn = g.common_neighbor_count(i, j)
    union = g.degree(i) + g.degree(j) - cn
    return cn / union if union else 0.0


def score_common_neighbors(g: Graph, i: int, j: int) -> float:
    _pair_check(g, i, j)
    return float(g.common_neighbor_count(i, j))


def score_pairs(
    g: Graph, pairs: np.ndarray, method: Method | str, params: ScoreParams = ScoreParams()
) -> np.ndarray:
    """Score every row of an ``(M, 2)`` pair array on ``g``."""
    method = Method(method)
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if pairs.size and ((pairs < 0).any() or (pairs >= g.node_count).any()):
        raise IndexError(f"pair contains node id outside [0, {g.node_count})")
    if (pairs[:, 0] == pairs[:, 1]).any():
        raise ValueError("pairs must not contain self-pairs")
    k = g.degrees
    if method.degree_dependent:
        gap = np.abs(k[pairs[:, 0]] - k[pairs[:, 1]]).astype(np.float64)
        if method is Method.HEI:
            return gap ** params.alpha
        return 1.0 / (gap + params.hoi_epsilon) ** params.alpha
    cn = g.common_neighbor_counts(pairs)
    if method is Method.CN:
        return cn.astype(np.float64)
    union = k[pairs[:, 0]] + k[pairs[:, 1]] - cn
    out = np.zeros(len(pairs), dtype=np.float64)
    np.divide(cn, union, out=out, where=union > 0)
    return out


@dataclass(frozen=True)
class Scorer:
    """A scoring method bound to its parameters; call it as ``scorer(graph, pairs)``."""

    method: Method
    params: ScoreParams = field(default_factory=ScoreParams)

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))

    @property
    def name(self) -> str:
        return self.method.value

    def __call__(self, g: Graph, pairs: np.ndarray) -> np.ndarray:
        return score_pairs(g, pairs, self.method, self.params)
