import pytest
from hypothesis import strategies as st

from imposedmst.graph import Graph

# G1: e0=(0,1,1) e1=(1,2,2) e2=(2,3,3) e3=(0,3,4) e4=(0,2,5)
G1_EDGES = [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4), (0, 2, 5)]
# path 0-1-2-3 with an expensive middle edge and two chords over it
PATH_EDGES = [(0, 1, 1), (1, 2, 10), (2, 3, 1), (0, 2, 11), (1, 3, 11)]


@pytest.fixture
def g1():
    return Graph.from_edges(4, G1_EDGES)


@pytest.fixture
def path4():
    return Graph.from_edges(4, PATH_EDGES)


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])


@pytest.fixture
def path3():
    # tree (0,1,1),(1,2,2) plus the closing edge (0,2,5)
    return Graph.from_edges(3, [(0, 1, 1), (1, 2, 2), (0, 2, 5)])


@st.composite
def connected_graphs(draw, max_nodes=7, max_extra=6, max_cost=20):
    """Connected multigraphs: a random spanning tree plus extra (possibly parallel) edges.

    Small cost ranges on purpose, so ties are frequent.
    """
    n = draw(st.integers(1, max_nodes))
    edges = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.append((u, v, draw(st.integers(-max_cost, max_cost))))
    if n > 1:
        for _ in range(draw(st.integers(0, max_extra))):
            u = draw(st.integers(0, n - 1))
            v = draw(st.integers(0, n - 2))
            v = v + 1 if v >= u else v
            edges.append((u, v, draw(st.integers(-max_cost, max_cost))))
    order = draw(st.permutations(range(len(edges))))
    return Graph.from_edges(n, [edges[i] for i in order])


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
