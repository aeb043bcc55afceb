"""Lower bound on the cost of any spanning tree containing an imposed edge set.

The bound is the base MST cost plus the replacement cost, measured against that
same base MST with nothing imposed, of every imposed edge. Imposed edges that
are already tree edges contribute 0; the original result only covers nontree
edges, and the extension is safe because imposing a tree edge costs nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph
from .mst import ImposedSet, check_imposed, constrained_mst, minimum_spanning_tree
from .tree import INF, Cost, _Infinite, replacement


@dataclass(frozen=True)
class Contribution:
    edge: int
    r_edge: Optional[Union[int, _Infinite]]  # None for a tree edge
    r_cost: Cost


@dataclass(frozen=True)
class BoundReport:
    base_cost: int
    contributions: tuple[Contribution, ...]
    lower_bound: Cost
    exact_cost: Optional[int] = None
    gap: Optional[int] = None


def lower_bound(g: Graph, imposed: ImposedSet, compute_exact: bool = True) -> BoundReport:
    check_imposed(g, imposed)
    t = minimum_spanning_tree(g)
    contributions = []
    for eid in sorted(set(imposed)):
        if eid in t.tree_edges:
            contributions.append(Contribution(eid, None, 0))
        else:
            r = replacement(t, frozenset(), eid)
            contributions.append(Contribution(eid, r.r_edge, r.r_cost))

    if any(c.r_cost is INF for c in contributions):
        bound: Cost = INF
    else:
        bound = t.total_cost + sum(c.r_cost for c in contributions)

    exact = gap = None
    if compute_exact:
        exact = constrained_mst(g, imposed).total_cost
        if bound is not INF:
            gap = exact - bound
    return BoundReport(t.total_cost, tuple(contributions), bound, exact, gap)
