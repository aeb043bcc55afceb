from itertools import combinations

import pytest
from hypothesis import given, settings

from imposedmst.errors import BudgetError
from imposedmst.graph import Graph
from imposedmst.oracle import (
    EnumerationBudget,
    brute_min_costs,
    brute_min_tree,
    enumerate_spanning_trees,
)

from .conftest import connected_graphs


def _is_spanning_tree(g, ids):
    # independent of both the oracle and the solver: plain flood fill
    if len(ids) != g.node_count - 1:
        return False
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for eid in ids:
            e = g.edges[eid]
            if x in (e.u, e.v) and e.other(x) not in seen:
                seen.add(e.other(x))
                stack.append(e.other(x))
    return len(seen) == g.node_count


def _all_trees_by_subsets(g):
    return {
        frozenset(c)
        for c in combinations(range(g.edge_count), g.node_count - 1)
        if _is_spanning_tree(g, c)
    }


def test_triangle_has_three_trees(triangle):
    assert len(list(enumerate_spanning_trees(triangle))) == 3


def test_g1_has_eight_trees(g1):
    assert len(list(enumerate_spanning_trees(g1))) == 8


def test_tree_shaped_graph_has_one_tree():
    g = Graph.from_edges(4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)])
    assert list(enumerate_spanning_trees(g)) == [frozenset({0, 1, 2})]


def test_single_node():
    g = Graph.from_edges(1, [])
    assert list(enumerate_spanning_trees(g)) == [frozenset()]
    assert brute_min_tree(g) == (0, frozenset())


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cayley_count(n):
    pairs = list(combinations(range(n), 2))
    g = Graph.from_edges(n, [(u, v, i) for i, (u, v) in enumerate(pairs)])
    assert len(list(enumerate_spanning_trees(g))) == n ** (n - 2)


def test_brute_min_tree_examples(g1, triangle):
    assert brute_min_tree(g1) == (6, frozenset({0, 1, 2}))
    assert brute_min_tree(g1, {3, 4}) == (10, frozenset({0, 3, 4}))
    assert brute_min_tree(triangle, {0, 1, 2}) is None


def test_tie_break_is_lexicographic():
    g = Graph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert brute_min_tree(g) == (2, frozenset({0, 1}))


def test_budget_nodes():
    g = Graph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    with pytest.raises(BudgetError):
        list(enumerate_spanning_trees(g, EnumerationBudget(max_nodes=2)))


def test_budget_trees(g1):
    with pytest.raises(BudgetError, match="more than 5"):
        list(enumerate_spanning_trees(g1, EnumerationBudget(max_trees=5)))


def test_budget_validation():
    with pytest.raises(ValueError):
        EnumerationBudget(max_trees=0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("MST_IMPOSE_BUDGET", "17")
    assert EnumerationBudget.from_env().max_trees == 17
    monkeypatch.setenv("MST_IMPOSE_BUDGET", "lots")
    with pytest.raises(ValueError):
        EnumerationBudget.from_env()


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_nodes=6, max_extra=4))
def test_enumeration_matches_subset_scan(g):
    trees = list(enumerate_spanning_trees(g))
    assert len(trees) == len(set(trees))
    assert set(trees) == _all_trees_by_subsets(g)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_nodes=6, max_extra=4))
def test_brute_min_costs_matches_brute_min_tree(g):
    table = brute_min_costs(g, range(g.edge_count), 2)
    for size in range(3):
        for subset in combinations(range(g.edge_count), size):
            found = brute_min_tree(g, subset)
            if found is None:
                assert frozenset(subset) not in table
            else:
                assert table[frozenset(subset)] == found[0]
