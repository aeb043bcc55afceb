"""Sequential edge imposition by swapping out replacement edges.

States are immutable; ``impose_edge`` always returns a new state, so a caller
can branch from any intermediate tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InfeasibleError
from .graph import Graph
from .mst import SpanningTree, minimum_spanning_tree
from .tree import is_inf, replacement, tree_path


@dataclass(frozen=True)
class ImpositionState:
    tree: SpanningTree
    imposed: frozenset[int]
    history: tuple[tuple[int, Optional[int]], ...]

    @classmethod
    def initial(cls, g: Graph) -> ImpositionState:
        return cls(minimum_spanning_tree(g), frozenset(), ())

    @property
    def total_cost(self) -> int:
        return self.tree.total_cost


def impose_edge(s: ImpositionState, e: int) -> ImpositionState:
    g = s.tree.graph
    if not 0 <= e < g.edge_count:
        raise ValueError(f"unknown edge id {e}")
    if e in s.tree.tree_edges:
        return ImpositionState(s.tree, s.imposed | {e}, s.history + ((e, None),))
    r = replacement(s.tree, s.imposed, e)
    if is_inf(r.r_edge):
        edge = g.edges[e]
        cycle = sorted(tree_path(s.tree, edge.u, edge.v) + [e])
        raise InfeasibleError(
            f"edge {e} closes a path of imposed edges: cycle {cycle}", cycle=cycle
        )
    tree = SpanningTree.from_edges(g, (s.tree.tree_edges - {r.r_edge}) | {e})
    assert tree.total_cost == s.tree.total_cost + r.r_cost
    return ImpositionState(tree, s.imposed | {e}, s.history + ((e, r.r_edge),))


def impose_all(g: Graph, edges: Iterable[int]) -> ImpositionState:
    state = ImpositionState.initial(g)
    for step, e in enumerate(edges):
        try:
            state = impose_edge(state, e)
        except InfeasibleError as exc:
            raise InfeasibleError(
                f"step {step}: {exc}", cycle=exc.cycle, step=step
            ) from exc
    return state


def replay(g: Graph, history: Iterable[tuple[int, Optional[int]]]) -> SpanningTree:
    """Rebuild the tree a history describes, starting from the base MST."""
    edges = set(minimum_spanning_tree(g).tree_edges)
    for added, removed in history:
        if removed is not None:
            edges.remove(removed)
        edges.add(added)
    return SpanningTree.from_edges(g, edges)
