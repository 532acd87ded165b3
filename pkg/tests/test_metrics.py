import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilink.generate import GeneratorConfig, generate_ba_tree, generate_graph
from trilink.graph import build
from trilink.metrics import (
    average_clustering,
    graph_stats,
    local_clustering,
    node_triangles,
    triangle_count,
)

from conftest import brute_force_clustering, edge_lists, random_graph


def complete(n):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def test_local_clustering_cases():
    assert all(local_clustering(complete(3), i) == 1.0 for i in range(3))
    path = build(3, [(0, 1), (1, 2)])
    assert local_clustering(path, 1) == 0.0
    assert local_clustering(path, 0) == 0.0
    with pytest.raises(IndexError):
        local_clustering(path, 3)


def test_average_clustering_cases():
    assert average_clustering(complete(5)).average == 1.0
    assert average_clustering(generate_ba_tree(300, 2)).average == 0.0
    # isolated node still counts in the denominator
    assert average_clustering(build(4, [(0, 1), (1, 2), (0, 2)])).average == 0.75


def test_matches_triple_enumeration():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(3, 41))
        g = random_graph(rng, n, rng.uniform(0.05, 0.9))
        c = brute_force_clustering(g)
        rep = average_clustering(g, keep_per_node=True)
        np.testing.assert_allclose(rep.per_node, c, atol=1e-12, rtol=0)
        assert abs(rep.average - c.mean()) <= 1e-12
        assert rep.node_count_used == n and rep.mode == "exact"


def test_sampled_full_size_equals_exact():
    g = generate_graph(GeneratorConfig(3000, 0.4, seed=8))
    exact = average_clustering(g)
    sampled = average_clustering(g, sample_size=g.node_count, seed=5)
    assert sampled.average == exact.average
    assert sampled.mode == "sampled" and sampled.sample_size == g.node_count


def test_sampled_estimate_close():
    g = generate_graph(GeneratorConfig(20_000, 0.4, seed=8))
    exact = average_clustering(g).average
    est = average_clustering(g, sample_size=5000, seed=1).average
    assert abs(est - exact) < 0.03


def test_sample_size_validation():
    g = complete(4)
    for bad in (0, 5):
        with pytest.raises(ValueError):
            average_clustering(g, sample_size=bad)


def test_triangle_count():
    assert triangle_count(complete(5)) == 10
    assert node_triangles(complete(4)).tolist() == [3, 3, 3, 3]


@settings(max_examples=100, deadline=None)
@given(edge_lists(max_nodes=15, max_edges=60), st.data())
def test_closing_edge_never_lowers_endpoint_triangles(data, more):
    n, edges = data
    g = build(n, edges)
    if n < 2:
        return
    u = more.draw(st.integers(0, n - 1))
    v = more.draw(st.integers(0, n - 1))
    if u == v or g.has_edge(u, v):
        return
    h = build(n, list(g.edges().tolist()) + [(u, v)])
    before = node_triangles(g, np.array([u, v]))
    after = node_triangles(h, np.array([u, v]))
    assert (after >= before).all()
    assert (after - before == g.common_neighbor_count(u, v)).all()


@given(edge_lists())
def test_report_ranges(data):
    n, edges = data
    rep = average_clustering(build(n, edges), keep_per_node=True)
    assert 0.0 <= rep.average <= 1.0
    assert ((rep.per_node >= 0) & (rep.per_node <= 1)).all()
    assert math.isclose(rep.average, rep.per_node.mean(), abs_tol=1e-12)


def test_graph_stats_keys():
    s = graph_stats(complete(4))
    assert s == {"n": 4, "e": 6, "avcc": 1.0, "avcc_mode": "exact", "avcc_nodes": 4,
                 "triangles": 4, "max_degree": 3}
