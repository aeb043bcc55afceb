"""Minimum spanning trees with imposed edges."""

from .bound import BoundReport, Contribution, lower_bound
from .errors import BudgetError, InfeasibleError, ParseError
from .graph import Edge, Graph, neighbors, parse_graph, render_graph
from .imposition import ImpositionState, impose_all, impose_edge
from .mst import SpanningTree, constrained_mst, minimum_spanning_tree
from .oracle import EnumerationBudget, brute_min_tree, enumerate_spanning_trees
from .tree import (
    INF,
    Replacement,
    check_cut_optimality,
    check_path_optimality,
    replacement,
    replacement_table,
    tree_path,
)
