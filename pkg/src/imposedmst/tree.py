"""Tree paths, replacement edges and the two MST optimality checks."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Union

from .graph import Graph
from .mst import ImposedSet, SpanningTree


@functools.total_ordering
class _Infinite:
    """Sentinel for a replacement that does not exist. Compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("imposedmst.INF")

    def __reduce__(self):
        return (_Infinite, ())


INF = _Infinite()
Cost = Union[int, _Infinite]


def is_inf(x) -> bool:
    return x is INF


@dataclass(frozen=True)
class Replacement:
    for_edge: int
    r_edge: Union[int, _Infinite]
    r_cost: Cost


def tree_path(t: SpanningTree, i: int, j: int) -> list[int]:
    """Edge ids on the tree path from i to j, ordered from i's side."""
    n = t.graph.node_count
    for x in (i, j):
        if not 0 <= x < n:
            raise IndexError(f"node {x} out of range [0, {n})")
    up, down = [], []
    while t.depth[i] > t.depth[j]:
        i, eid = t.parent[i]
        up.append(eid)
    while t.depth[j] > t.depth[i]:
        j, eid = t.parent[j]
        down.append(eid)
    while i != j:
        i, eid = t.parent[i]
        up.append(eid)
        j, eid = t.parent[j]
        down.append(eid)
    down.reverse()
    return up + down


def replacement(t: SpanningTree, imposed: ImposedSet, e: int) -> Replacement:
    """Max-cost non-imposed edge on the tree path closed by nontree edge ``e``."""
    g = t.graph
    if e in t.tree_edges:
        raise ValueError(f"edge {e} is a tree edge; replacement needs a nontree edge")
    edge = g.edges[e]
    best = None
    for eid in tree_path(t, edge.u, edge.v):
        if eid in imposed:
            continue
        if best is None or (g.edges[eid].cost, -eid) > (g.edges[best].cost, -best):
            best = eid
    if best is None:
        return Replacement(e, INF, INF)
    return Replacement(e, best, edge.cost - g.edges[best].cost)


def replacement_table(
    t: SpanningTree, imposed: ImposedSet, g: Graph | None = None
) -> dict[int, Replacement]:
    g = t.graph if g is None else g
    if g is not t.graph and g != t.graph:
        raise ValueError("tree does not span the given graph")
    return {eid: replacement(t, imposed, eid) for eid in t.nontree_edges()}


def check_path_optimality(t: SpanningTree, g: Graph | None = None) -> bool:
    g = t.graph if g is None else g
    for e in g.edges:
        if e.id in t.tree_edges:
            continue
        if any(g.edges[p].cost > e.cost for p in tree_path(t, e.u, e.v)):
            return False
    return True


def check_cut_optimality(t: SpanningTree, g: Graph | None = None) -> bool:
    # Deliberately avoids tree_path: each tree edge's cut is found by flood fill.
    g = t.graph if g is None else g
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.node_count)]
    for eid in t.tree_edges:
        e = g.edges[eid]
        adj[e.u].append((eid, e.v))
        adj[e.v].append((eid, e.u))
    for removed in t.tree_edges:
        side = {g.edges[removed].u}
        stack = [g.edges[removed].u]
        while stack:
            node = stack.pop()
            for eid, other in adj[node]:
                if eid != removed and other not in side:
                    side.add(other)
                    stack.append(other)
        limit = g.edges[removed].cost
        for e in g.edges:
            if (e.u in side) != (e.v in side) and e.cost < limit:
                return False
    return True
