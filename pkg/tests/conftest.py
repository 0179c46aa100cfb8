import random

import pytest

from tempered_kit.graphalg import Graph, condition_K


def loops(n_loops_at: dict[int, int], extra=(), n=None) -> Graph:
    n = n or max([*n_loops_at, *(max(e[:2]) for e in extra)] or [1])
    edges = [(v, v, m) for v, m in n_loops_at.items()] + list(extra)
    return Graph.from_edges(n, edges)


def random_graph(rng: random.Random, max_vertices=6, max_mult=3) -> Graph:
    n = rng.randint(1, max_vertices)
    density = rng.random() * 0.5
    edges = [
        (u, v, rng.randint(1, max_mult))
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if rng.random() < density
    ]
    return Graph.from_edges(n, edges)


def random_k_graphs(count: int, seed: int, max_vertices=6):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng, max_vertices)
        if condition_K(g)[0]:
            out.append(g)
    return out


@pytest.fixture
def mixed_graph():
    """Two loops at 1, edge 1->2, vertex 2 a sink (Prim 2.1.2)."""
    return loops({1: 2}, [(1, 2, 1)])


@pytest.fixture
def pi_chain_graph():
    """Two loops at each of 1 and 2, edge 1->2 (Prim 2.1.3)."""
    return loops({1: 2, 2: 2}, [(1, 2, 1)])


@pytest.fixture
def worked_graph():
    """Three loops at 1, edge 1->2, two loops at 2."""
    return loops({1: 3, 2: 2}, [(1, 2, 1)])


@pytest.fixture
def g_4_39_10():
    """Prim signature 4.39.10: two PI points above two AF ideals."""
    return Graph.from_edges(4, [(1, 1, 2), (1, 2), (1, 4), (2, 2, 2), (2, 3)])
