import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilink.evaluation import (
    AucResult,
    auc,
    auc_from_scores,
    hits_at_k,
    hits_from_scores,
    sample_negatives,
    split_edges,
    split_from_positives,
)
from trilink.generate import GeneratorConfig, generate_ba_tree, generate_graph
from trilink.graph import build, edge_keys
from trilink.predictors import Scorer

from conftest import random_graph


def complete(n):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edge_set(arr):
    return {tuple(e) for e in np.asarray(arr).tolist()}


def oracle_for(split):
    keys = set(edge_keys(split.positives[:, 0], split.positives[:, 1], split.observed.node_count).tolist())

    def score(g, pairs):
        q = edge_keys(pairs[:, 0], pairs[:, 1], g.node_count)
        return np.array([1.0 if k in keys else 0.0 for k in q.tolist()])

    return score


def test_split_counts():
    rng = np.random.default_rng(0)
    g = random_graph(rng, 40, 0.2)
    g = build(40, g.edges()[:100])
    assert g.edge_count == 100
    s = split_edges(g, 0.1, 5)
    assert len(s.positives) == 10 and s.train_graph.edge_count == 90


def test_split_k4_half():
    s = split_edges(complete(4), 0.5, 1)
    assert len(s.positives) == 3 and s.train_graph.edge_count == 3
    assert not s.train_graph.contains_pairs(s.positives).any()


def test_split_deterministic():
    g = generate_graph(GeneratorConfig(2000, 0.3, seed=1))
    a, b = split_edges(g, 0.1, 42), split_edges(g, 0.1, 42)
    assert np.array_equal(a.positives, b.positives) and a.train_graph == b.train_graph
    c = split_edges(g, 0.1, 43)
    assert not np.array_equal(a.positives, c.positives)


def test_split_rejects_degenerate():
    g = build(3, [(0, 1), (1, 2)])
    for bad in (0.0, 1.0, 0.99):
        with pytest.raises(ValueError):
            split_edges(g, bad, 0)
    with pytest.raises(ValueError):
        split_edges(build(2, [(0, 1)]), 0.5, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 200), st.floats(0.01, 0.9), st.integers(0, 2**32))
def test_split_partitions_edges(n, ratio, seed):
    g = generate_graph(GeneratorConfig(n, 0.5, seed=seed))
    try:
        s = split_edges(g, ratio, seed)
    except ValueError:
        return
    train, pos = edge_set(s.train_graph.edges()), edge_set(s.positives)
    assert not train & pos
    assert train | pos == edge_set(g.edges())
    assert s.observed is g


def test_negatives_on_path():
    pairs = sample_negatives(build(3, [(0, 1), (1, 2)]), 5, 0)
    assert pairs.tolist() == [[0, 2]] * 5


def test_negatives_reject_complete():
    with pytest.raises(ValueError, match="complete"):
        sample_negatives(complete(4), 3, 0)


def test_negatives_never_edges():
    g = generate_ba_tree(1000, 3)
    pairs = sample_negatives(g, 100_000, 9)
    assert pairs.shape == (100_000, 2)
    assert (pairs[:, 0] < pairs[:, 1]).all()
    a = {tuple(e) for e in g.edges().tolist()}
    assert not any(tuple(p) in a for p in pairs.tolist())


def test_negatives_uniform_over_non_edges():
    # star on 5 nodes: 6 non-edges among the leaves
    g = build(5, [(0, i) for i in range(1, 5)])
    pairs = sample_negatives(g, 60_000, 2)
    _, counts = np.unique(pairs[:, 0] * 5 + pairs[:, 1], return_counts=True)
    assert len(counts) == 6
    np.testing.assert_allclose(counts / 60_000, 1 / 6, atol=0.01)


def test_negatives_near_complete_small_graph():
    e = [(i, j) for i in range(50) for j in range(i + 1, 50) if (i, j) != (3, 7)]
    pairs = sample_negatives(build(50, e), 10, 0)
    assert pairs.tolist() == [[3, 7]] * 10


def test_auc_from_counts():
    r = AucResult.from_counts(100, 50, 10)
    assert r.auc == 0.55
    with pytest.raises(ValueError):
        AucResult.from_counts(10, 8, 5)


def test_auc_oracle_and_constant():
    g = generate_graph(GeneratorConfig(3000, 0.3, seed=2))
    split = split_edges(g, 0.1, 2)
    for m in (1, 17, 5000):
        assert auc(oracle_for(split), split, m, 3).auc == 1.0
        const = auc(lambda g, p: np.full(len(p), 0.3), split, m, 3)
        assert const.m_tie == m and const.auc == 0.5


def test_auc_rejects_bad_input():
    split = split_edges(generate_ba_tree(100, 0), 0.1, 0)
    with pytest.raises(ValueError):
        auc(Scorer("hei"), split, 0, 0)


def test_auc_tie_tolerance():
    a = np.array([1.0, 1.0 + 1e-14, 2.0, 1e6])
    b = np.array([1.0, 1.0, 1.0, 1e6 * (1 + 5e-13)])
    r = auc_from_scores(a, b)
    assert (r.m_strict, r.m_tie) == (1, 3)


def test_auc_negation_complements():
    g = generate_graph(GeneratorConfig(3000, 0.3, seed=2))
    split = split_edges(g, 0.1, 2)
    for method in ("hei", "hoi", "jac", "cn"):
        s = Scorer(method)
        a = auc(s, split, 20_000, 8)
        b = auc(lambda g, p: -s(g, p), split, 20_000, 8)
        assert a.m_tie == b.m_tie
        assert a.m_strict + b.m_strict + a.m_tie == a.m
        assert abs(a.auc + b.auc - 1.0) < 1e-12


def test_auc_random_scorer_near_half():
    g = generate_graph(GeneratorConfig(3000, 0.3, seed=2))
    split = split_edges(g, 0.1, 2)
    rng = np.random.default_rng(0)
    r = auc(lambda g, p: rng.random(len(p)), split, 100_000, 1)
    assert abs(r.auc - 0.5) < 0.02


def test_auc_with_explicit_negatives():
    g = generate_ba_tree(500, 1)
    split = split_edges(g, 0.1, 1)
    negs = sample_negatives(g, 50, 4)
    r = auc(oracle_for(split), split, 1000, 0, negatives=negs)
    assert r.auc == 1.0


def test_leakage_scores_use_training_graph_only():
    g = generate_graph(GeneratorConfig(2000, 0.5, seed=6))
    split = split_edges(g, 0.1, 6)
    e = g.edges()
    held = np.isin(edge_keys(e[:, 0], e[:, 1], g.node_count),
                   edge_keys(split.positives[:, 0], split.positives[:, 1], g.node_count))
    assert held.sum() == len(split.positives)
    assert build(g.node_count, e[~held]) == split.train_graph
    seen = []

    def spy(graph, pairs):
        seen.append(graph)
        return Scorer("cn")(graph, pairs)

    auc(spy, split, 5000, 1)
    assert seen and all(x is split.train_graph for x in seen)
    # held-out edges score as if absent
    cn = Scorer("cn")(split.train_graph, split.positives)
    direct = [len(set(split.train_graph.neighbors(u).tolist()) & set(split.train_graph.neighbors(v).tolist()))
              for u, v in split.positives.tolist()]
    assert cn.tolist() == direct


def test_hits_hand_cases():
    assert hits_from_scores([1.0, 1.0], [0.0, 0.0, 0.0], 2).hits == 1.0
    assert hits_from_scores([0.5, 0.5], [0.5, 0.5], 1).hits == 0.0
    assert hits_from_scores([5, 3, 1], [4, 2], 1).hits == pytest.approx(1 / 3, abs=0)
    assert hits_from_scores([5, 3, 1], [4, 2], 2).hits == pytest.approx(2 / 3, abs=0)
    with pytest.raises(ValueError):
        hits_from_scores([1.0], [0.0], 2)


@given(st.lists(st.floats(-5, 5), min_size=1, max_size=30),
       st.lists(st.floats(-5, 5), min_size=1, max_size=30))
def test_hits_monotone_in_k(pos, neg):
    vals = [hits_from_scores(pos, neg, k).hits for k in range(1, len(neg) + 1)]
    assert all(0.0 <= v <= 1.0 for v in vals)
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_hits_at_k_on_split():
    split = split_edges(generate_graph(GeneratorConfig(2000, 0.6, seed=3)), 0.1, 3)
    negs = sample_negatives(split.observed, 1000, 3)
    assert hits_at_k(oracle_for(split), split, negs, 10).hits == 1.0
    with pytest.raises(ValueError):
        hits_at_k(Scorer("jac"), split, negs[:5], 10)


def test_split_from_positives_removes_leaks():
    g = build(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    s = split_from_positives(g, np.array([[2, 1], [0, 4]]))
    assert s.positives.tolist() == [[1, 2], [0, 4]]
    assert not s.train_graph.has_edge(1, 2)
    assert s.observed.has_edge(0, 4) and s.observed.has_edge(1, 2)
    with pytest.raises(ValueError):
        split_from_positives(g, np.array([[0, 9]]))
