import itertools
import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st

from trilink.graph import build

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def random_graph(rng, n, p):
    """Erdős–Rényi graph G(n, p)."""
    iu, iv = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    edges = np.stack([iu[keep], iv[keep]], axis=1)
    return build(n, edges)


def dense_adjacency(g):
    a = np.zeros((g.node_count, g.node_count), dtype=bool)
    e = g.edges()
    a[e[:, 0], e[:, 1]] = True
    a[e[:, 1], e[:, 0]] = True
    return a


def brute_force_clustering(g):
    """Local clustering by enumerating every node triple."""
    a = dense_adjacency(g)
    n = g.node_count
    tri = np.zeros(n)
    for i, j, k in itertools.combinations(range(n), 3):
        if a[i, j] and a[j, k] and a[i, k]:
            tri[[i, j, k]] += 1
    deg = a.sum(axis=1)
    c = np.zeros(n)
    for i in range(n):
        if deg[i] >= 2:
            c[i] = 2 * tri[i] / (deg[i] * (deg[i] - 1))
    return c


@st.composite
def edge_lists(draw, max_nodes=25, max_edges=80):
    n = draw(st.integers(1, max_nodes))
    node = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(node, node), max_size=max_edges))
    return n, edges


# ---- acceptance summary -------------------------------------------------

_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    def record(criterion: str, ok: bool | None, detail: str = ""):
        """``ok=None`` marks a criterion skipped for missing inputs."""
        _ACCEPTANCE.append((criterion, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        status = "SKIP" if ok is None else "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}")
