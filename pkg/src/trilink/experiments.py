"""Synthetic sweeps and real-graph tables.

Each driver returns a list of flat row dicts (one CSV row each) so results can
be written with :func:`trilink.io.write_csv` or dumped to JSON unchanged.
Within a sweep the same seed list is reused for every grid point, so a given
seed always starts from the same BA tree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .evaluation import auc, split_edges
from .generate import GeneratorConfig, generate_graph
from .io import parse_edge_list
from .metrics import average_clustering
from .predictors import Method, Scorer, ScoreParams
from .report import evaluate_graph
from .selector import BoundaryConfig, recommend

__all__ = [
    "SweepSpec",
    "CrossoverResult",
    "TableConfig",
    "sweep_d",
    "find_crossover",
    "sweep_n",
    "table_eval",
    "SWEEP_D_COLUMNS",
    "CROSSOVER_COLUMNS",
    "SWEEP_N_COLUMNS",
    "TABLE_COLUMNS",
]

log = logging.getLogger(__name__)

SWEEP_D_COLUMNS = ["d", "n", "seeds", "mean_avcc", "std_avcc"]
CROSSOVER_COLUMNS = [
    "d", "n", "seeds", "mean_avcc", "mean_auc_hei", "mean_auc_jac", "std_auc_hei", "std_auc_jac",
]
SWEEP_N_COLUMNS = ["n", "d", "seeds", "mean_avcc", "std_avcc"]
TABLE_COLUMNS = [
    "dataset", "n", "e", "avcc", "auc_hoi", "auc_hei", "auc_jac", "best", "regime", "error",
]

DESK_N = 20_000
FULL_N = 100_000


@dataclass(frozen=True)
class SweepSpec:
    n: int = DESK_N
    d_grid: tuple[float, ...] = tuple(round(0.1 * i, 2) for i in range(11))
    seeds: tuple[int, ...] = (0, 1, 2)
    alpha: float = 0.5
    ratio: float = 0.1
    m: int = 50_000
    epsilon: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "d_grid", tuple(float(d) for d in self.d_grid))
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if not self.d_grid or not self.seeds:
            raise ValueError("d_grid and seeds must be non-empty")
        if any(not 0.0 <= d <= 1.0 for d in self.d_grid):
            raise ValueError(f"every d must be in [0, 1], got {self.d_grid}")


def _avcc(n: int, d: float, seed: int, epsilon: float = 1e-9) -> float:
    return average_clustering(generate_graph(GeneratorConfig(n, d, epsilon, seed))).average


def sweep_d(spec: SweepSpec) -> list[dict]:
    rows = []
    for d in sorted(set(spec.d_grid)):
        vals = np.array([_avcc(spec.n, d, s, spec.epsilon) for s in spec.seeds])
        rows.append({
            "d": d, "n": spec.n, "seeds": len(spec.seeds),
            "mean_avcc": float(vals.mean()), "std_avcc": float(vals.std()),
        })
    return rows


@dataclass
class CrossoverResult:
    found: bool
    d_star: float | None
    avcc_star: float | None
    table: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"found": self.found, "d_star": self.d_star, "avcc_star": self.avcc_star,
                "table": self.table}


def find_crossover(spec: SweepSpec) -> CrossoverResult:
    """Locate the smallest grid ``d`` at which Jaccard out-scores HEI on mean AUC."""
    params = ScoreParams(alpha=spec.alpha)
    hei = Scorer(Method.HEI, params)
    jac = Scorer(Method.JAC, params)
    rows = []
    for d in sorted(set(spec.d_grid)):
        cc, a_hei, a_jac = [], [], []
        for s in spec.seeds:
            g = generate_graph(GeneratorConfig(spec.n, d, spec.epsilon, s))
            cc.append(average_clustering(g).average)
            split = split_edges(g, spec.ratio, s)
            a_hei.append(auc(hei, split, spec.m, s).auc)
            a_jac.append(auc(jac, split, spec.m, s).auc)
        rows.append({
            "d": d, "n": spec.n, "seeds": len(spec.seeds),
            "mean_avcc": float(np.mean(cc)),
            "mean_auc_hei": float(np.mean(a_hei)), "mean_auc_jac": float(np.mean(a_jac)),
            "std_auc_hei": float(np.std(a_hei)), "std_auc_jac": float(np.std(a_jac)),
        })
    for r in rows:
        if r["mean_auc_jac"] > r["mean_auc_hei"]:
            return CrossoverResult(True, r["d"], r["mean_avcc"], rows)
    return CrossoverResult(False, None, None, rows)


def sweep_n(d, n_grid, seeds=(0, 1, 2), epsilon: float = 1e-9) -> list[dict]:
    """Mean AvCC per graph order.

    ``d`` is either one probability used for every ``n`` or a sequence with
    one probability per entry of ``n_grid``.
    """
    n_grid = [int(n) for n in n_grid]
    seeds = [int(s) for s in seeds]
    if not n_grid or not seeds:
        raise ValueError("n_grid and seeds must be non-empty")
    ds = [float(x) for x in d] if np.ndim(d) else [float(d)] * len(n_grid)
    if len(ds) != len(n_grid):
        raise ValueError(f"got {len(ds)} d values for {len(n_grid)} graph orders")
    rows = []
    for n, dn in sorted(zip(n_grid, ds)):
        vals = np.array([_avcc(n, dn, s, epsilon) for s in seeds])
        rows.append({"n": n, "d": dn, "seeds": len(seeds),
                     "mean_avcc": float(vals.mean()), "std_avcc": float(vals.std())})
    return rows


@dataclass(frozen=True)
class TableConfig:
    ratio: float = 0.1
    m: int = 100_000
    alpha: float = 0.5
    seed: int = 0
    boundary: BoundaryConfig = BoundaryConfig()
    symmetrize: bool = True


def table_eval(datasets, config: TableConfig = TableConfig()) -> list[dict]:
    """Evaluate HOI, HEI and Jaccard on each ``(name, path)`` edge list.

    Rows come back sorted by AvCC. A dataset that fails to load or evaluate
    yields a row with ``error`` set instead of aborting the run.
    """
    rows = []
    for name, path in datasets:
        try:
            g, _ = parse_edge_list(path, symmetrize=config.symmetrize)
            rep = evaluate_graph(
                g, methods=("hoi", "hei", "jac"), ratio=config.ratio, m=config.m,
                alpha=config.alpha, seed=config.seed, boundary=config.boundary, dataset=name,
            )
        except Exception as exc:  # noqa: BLE001 - one bad dataset must not sink the table
            log.error("dataset %s failed: %s", name, exc)
            rows.append({"dataset": name, "error": f"{type(exc).__name__}: {exc}"})
            continue
        aucs = {r.name: r.auc for r in rep.methods}
        rows.append({
            "dataset": name, "n": rep.n, "e": rep.e, "avcc": rep.avcc,
            "auc_hoi": aucs["hoi"], "auc_hei": aucs["hei"], "auc_jac": aucs["jac"],
            "best": rep.best(), "regime": recommend(rep.avcc, config.boundary).regime.value,
            "error": "",
        })
    ok = sorted((r for r in rows if not r.get("error")), key=lambda r: r["avcc"])
    return ok + [r for r in rows if r.get("error")]
