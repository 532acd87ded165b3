"""Topology-only link prediction on featureless graphs, and tools to decide
between degree-dependent and neighborhood scores from the average clustering
coefficient."""

from .evaluation import EdgeSplit, auc, hits_at_k, sample_negatives, split_edges
from .generate import GeneratorConfig, densify, generate_ba_tree, generate_graph
from .graph import Graph, build
from .metrics import average_clustering, local_clustering
from .predictors import Method, Scorer, ScoreParams
from .selector import BoundaryConfig, Recommendation, Regime, auto_select, recommend

__version__ = "0.1.0"

__all__ = [
    "EdgeSplit", "auc", "hits_at_k", "sample_negatives", "split_edges",
    "GeneratorConfig", "densify", "generate_ba_tree", "generate_graph",
    "Graph", "build", "average_clustering", "local_clustering",
    "Method", "Scorer", "ScoreParams",
    "BoundaryConfig", "Recommendation", "Regime", "auto_select", "recommend",
]
