import random

import pytest

from cds3 import Graph, complete_graph, cycle_graph


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


@pytest.fixture
def net_graph():
    # triangle 0-2-3 with pendants 1 (at 0), 4 (at 2), 5 (at 3)
    return Graph.from_edges(6, [(0, 2), (0, 3), (2, 3), (0, 1), (2, 4), (3, 5)])


def random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240817)
