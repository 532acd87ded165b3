"""Pick a predictor family from the average clustering coefficient.

Below ``lower`` the graph is treated as sparse and degree-dependent scores are
recommended; above ``upper`` neighborhood overlap (Jaccard) is. Inside the band
the call is left open, and :func:`auto_select` settles it on a validation split.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import _rng
from .evaluation import auc, split_edges
from .graph import Graph
from .metrics import average_clustering
from .predictors import Method, Scorer, ScoreParams

__all__ = ["BoundaryConfig", "Regime", "Recommendation", "recommend", "auto_select"]


@dataclass(frozen=True)
class BoundaryConfig:
    lower: float = 0.27
    upper: float = 0.37

    def __post_init__(self):
        if not 0.0 <= self.lower <= self.upper <= 1.0:
            raise ValueError(f"need 0 <= lower <= upper <= 1, got {self.lower}, {self.upper}")


class Regime(str, enum.Enum):
    DEGREE_DEPENDENT = "DegreeDependent"
    AMBIGUOUS = "Ambiguous"
    COMMON_NEIGHBOR = "CommonNeighbor"


@dataclass(frozen=True)
class Recommendation:
    regime: Regime
    avcc: float
    chosen: Scorer | None = None
    validation_auc: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "avcc": self.avcc,
            "chosen": None if self.chosen is None else self.chosen.name,
            "validation_auc": dict(self.validation_auc),
        }


def recommend(avcc: float, cfg: BoundaryConfig = BoundaryConfig()) -> Recommendation:
    if not 0.0 <= avcc <= 1.0:
        raise ValueError(f"avcc must be in [0, 1], got {avcc}")
    if avcc < cfg.lower:
        regime = Regime.DEGREE_DEPENDENT
    elif avcc > cfg.upper:
        regime = Regime.COMMON_NEIGHBOR
    else:
        regime = Regime.AMBIGUOUS
    return Recommendation(regime, float(avcc))


_CANDIDATES = {
    Regime.DEGREE_DEPENDENT: (Method.HEI, Method.HOI),
    Regime.AMBIGUOUS: (Method.HEI, Method.HOI, Method.JAC),
    Regime.COMMON_NEIGHBOR: (Method.JAC, Method.HEI, Method.HOI),
}


def auto_select(
    g: Graph,
    cfg: BoundaryConfig = BoundaryConfig(),
    val_ratio: float = 0.05,
    m: int = 50_000,
    seed: int = 0,
    params: ScoreParams = ScoreParams(),
) -> Recommendation:
    """Recommend a regime for ``g`` and choose a concrete scorer.

    ``g`` must be the caller's training graph: the validation split is carved
    from it, so held-out test edges are never touched. In the common-neighbor
    regime Jaccard is chosen outright; elsewhere the candidate with the best
    validation AUC wins (ties go to the earlier candidate).
    """
    rec = recommend(average_clustering(g).average, cfg)
    try:
        split = split_edges(g, val_ratio, _rng.child_seed(seed, _rng.VALIDATION))
    except ValueError as exc:
        raise ValueError(f"graph too small for a validation split: {exc}") from exc
    scores = {}
    for method in _CANDIDATES[rec.regime]:
        scores[method.value] = auc(Scorer(method, params), split, m, seed).auc
    if rec.regime is Regime.COMMON_NEIGHBOR:
        best = Method.JAC
    else:
        best = Method(max(scores, key=scores.__getitem__))
    return Recommendation(rec.regime, rec.avcc, Scorer(best, params), scores)
