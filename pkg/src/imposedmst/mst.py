"""Kruskal MST with optional imposed edges.

Imposed edges are contracted by seeding the union-find before the greedy pass;
the result is a minimum spanning tree among those containing every imposed edge.
Ties between equal costs go to the lower edge id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import AbstractSet, Iterable, Optional

from .errors import InfeasibleError
from .graph import Graph

ImposedSet = AbstractSet[int]


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.components -= 1
        return True


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of ``graph`` rooted at node 0.

    ``parent[n]`` is ``(parent node, edge id)`` or None for the root.
    """

    graph: Graph = field(repr=False, compare=False)
    tree_edges: frozenset[int]
    total_cost: int
    parent: tuple[Optional[tuple[int, int]], ...] = field(repr=False, compare=False)
    depth: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, g: Graph, edge_ids: Iterable[int]) -> SpanningTree:
        ids = frozenset(edge_ids)
        for eid in ids:
            if not 0 <= eid < g.edge_count:
                raise ValueError(f"unknown edge id {eid}")
        if len(ids) != g.node_count - 1:
            raise ValueError(
                f"a spanning tree of {g.node_count} nodes needs {g.node_count - 1} "
                f"edges, got {len(ids)}"
            )
        parent: list[Optional[tuple[int, int]]] = [None] * g.node_count
        depth = [-1] * g.node_count
        depth[0] = 0
        queue = deque([0])
        while queue:
            node = queue.popleft()
            for eid in g.incidence[node]:
                if eid not in ids:
                    continue
                other = g.edges[eid].other(node)
                if depth[other] < 0:
                    depth[other] = depth[node] + 1
                    parent[other] = (node, eid)
                    queue.append(other)
        if min(depth) < 0:
            raise ValueError("edges do not span the graph")
        total = sum(g.edges[eid].cost for eid in ids)
        return cls(g, ids, total, tuple(parent), tuple(depth))

    def __contains__(self, eid: int) -> bool:
        return eid in self.tree_edges

    def nontree_edges(self) -> list[int]:
        return [e.id for e in self.graph.edges if e.id not in self.tree_edges]


def _sorted_edge_ids(g: Graph) -> list[int]:
    return sorted(range(g.edge_count), key=lambda eid: (g.edges[eid].cost, eid))


def _seed_imposed(g: Graph, imposed: Iterable[int], uf: UnionFind) -> list[int]:
    seeded = []
    for eid in sorted(set(imposed)):
        if not 0 <= eid < g.edge_count:
            raise ValueError(f"unknown edge id {eid}")
        e = g.edges[eid]
        if not uf.union(e.u, e.v):
            cycle = _forest_path(g, seeded, e.u, e.v) + [eid]
            raise InfeasibleError(
                f"imposed edges contain a cycle: {sorted(cycle)}", cycle=sorted(cycle)
            )
        seeded.append(eid)
    return seeded


def _forest_path(g: Graph, forest: list[int], src: int, dst: int) -> list[int]:
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in forest:
        e = g.edges[eid]
        adj.setdefault(e.u, []).append((eid, e.v))
        adj.setdefault(e.v, []).append((eid, e.u))
    came: dict[int, tuple[int, int]] = {src: (-1, -1)}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == dst:
            break
        for eid, other in adj.get(node, ()):
            if other not in came:
                came[other] = (node, eid)
                queue.append(other)
    path = []
    node = dst
    while node != src:
        node, eid = came[node]
        path.append(eid)
    return path


def check_imposed(g: Graph, imposed: Iterable[int]) -> None:
    """Raise InfeasibleError if the imposed edges contain a cycle."""
    _seed_imposed(g, imposed, UnionFind(g.node_count))


def _disconnected(uf: UnionFind, n: int) -> InfeasibleError:
    root = uf.find(0)
    other = next(x for x in range(n) if uf.find(x) != root)
    return InfeasibleError(
        f"graph is disconnected: nodes 0 and {other} are in different components",
        components=(0, other),
    )


def constrained_mst(g: Graph, imposed: ImposedSet = frozenset()) -> SpanningTree:
    uf = UnionFind(g.node_count)
    chosen = _seed_imposed(g, imposed, uf)
    for eid in _sorted_edge_ids(g):
        if uf.components == 1:
            break
        e = g.edges[eid]
        if uf.union(e.u, e.v):
            chosen.append(eid)
    if uf.components > 1:
        raise _disconnected(uf, g.node_count)
    return SpanningTree.from_edges(g, chosen)


def minimum_spanning_tree(g: Graph) -> SpanningTree:
    return constrained_mst(g, frozenset())
