"""Immutable weighted undirected multigraph and its edge-list text format.

Format::

    # comment
    p <node_count> <edge_count>
    e <u> <v> <cost>

Edge ids are assigned in order of appearance, starting at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    cost: int

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


@dataclass(frozen=True)
class Graph:
    node_count: int
    edges: tuple[Edge, ...]
    incidence: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph from ``(u, v, cost)`` triples; ids follow iteration order."""
        if node_count < 1:
            raise ValueError(f"node_count must be >= 1, got {node_count}")
        built = []
        incidence: list[list[int]] = [[] for _ in range(node_count)]
        for eid, (u, v, cost) in enumerate(edges):
            _check_edge(node_count, u, v, cost)
            built.append(Edge(eid, u, v, cost))
            incidence[u].append(eid)
            incidence[v].append(eid)
        return cls(node_count, tuple(built), tuple(tuple(ids) for ids in incidence))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def cost(self, eid: int) -> int:
        return self.edges[eid].cost


def _check_edge(node_count, u, v, cost):
    for x in (u, v):
        if not 0 <= x < node_count:
            raise ValueError(f"endpoint {x} out of range [0, {node_count})")
    if u == v:
        raise ValueError(f"self-loop on node {u}")
    if not INT64_MIN <= cost <= INT64_MAX:
        raise ValueError(f"cost {cost} outside the signed 64-bit range")


def neighbors(g: Graph, n: int) -> list[tuple[int, int]]:
    """(edge id, other endpoint) for every edge incident to ``n``, by ascending id."""
    if not 0 <= n < g.node_count:
        raise IndexError(f"node {n} out of range [0, {g.node_count})")
    return [(eid, g.edges[eid].other(n)) for eid in sorted(g.incidence[n])]


def parse_graph(text: str) -> Graph:
    node_count = edge_count = None
    header_line = 0
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if node_count is not None:
                raise ParseError("duplicate header", lineno)
            if len(fields) != 3:
                raise ParseError("header must be 'p <node_count> <edge_count>'", lineno)
            node_count, edge_count = _ints(fields[1:], lineno)
            header_line = lineno
            if node_count < 1:
                raise ParseError(f"node_count must be >= 1, got {node_count}", lineno)
            if edge_count < 0:
                raise ParseError(f"negative edge_count {edge_count}", lineno)
        elif tag == "e":
            if node_count is None:
                raise ParseError("edge line before header", lineno)
            if len(fields) != 4:
                raise ParseError("edge must be 'e <u> <v> <cost>'", lineno)
            u, v, cost = _ints(fields[1:], lineno)
            try:
                _check_edge(node_count, u, v, cost)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            if len(triples) == edge_count:
                raise ParseError(f"more than the declared {edge_count} edges", lineno)
            triples.append((u, v, cost))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if node_count is None:
        raise ParseError("missing 'p' header")
    if len(triples) != edge_count:
        raise ParseError(
            f"header declares {edge_count} edges, found {len(triples)}", header_line
        )
    return Graph.from_edges(node_count, triples)


def _ints(fields, lineno):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno) from None


def render_graph(g: Graph) -> str:
    lines = [f"p {g.node_count} {g.edge_count}"]
    lines.extend(f"e {e.u} {e.v} {e.cost}" for e in g.edges)
    return "\n".join(lines) + "\n"
