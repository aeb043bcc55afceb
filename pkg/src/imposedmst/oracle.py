"""Brute-force spanning tree enumeration, used as ground truth in tests and `verify`.

Intentionally shares nothing with the solver modules except the graph types.
"""

from __future__ import annotations

import os
from itertools import combinations
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BudgetError
from .graph import Graph

BUDGET_ENV = "MST_IMPOSE_BUDGET"


@dataclass(frozen=True)
class EnumerationBudget:
    max_nodes: int = 8
    max_trees: int = 10**6

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_trees < 1:
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls) -> EnumerationBudget:
        raw = os.environ.get(BUDGET_ENV)
        if raw is None:
            return cls()
        try:
            return cls(max_trees=int(raw))
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be a positive integer, got {raw!r}") from None


class _UndoDSU:
    # no path compression, so every union can be undone in O(1)
    def __init__(self, n):
        self.up = list(range(n))
        self.size = [1] * n
        self.log = []

    def find(self, x):
        while self.up[x] != x:
            x = self.up[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.up[b] = a
        self.size[a] += self.size[b]
        self.log.append(b)
        return True

    def undo(self):
        b = self.log.pop()
        a = self.up[b]
        self.up[b] = b
        self.size[a] -= self.size[b]


def _can_connect(dsu, n, edges, extra):
    label = [dsu.find(x) for x in range(n)]
    roots = {r: r for r in set(label)}

    def top(x):
        while roots[x] != x:
            x = roots[x]
        return x

    pieces = len(roots)
    for e in extra:
        a, b = top(label[edges[e].u]), top(label[edges[e].v])
        if a != b:
            roots[b] = a
            pieces -= 1
            if pieces == 1:
                return True
    return pieces == 1


def enumerate_spanning_trees(
    g: Graph,
    budget: EnumerationBudget = EnumerationBudget(),
    required: Iterable[int] = (),
) -> Iterator[frozenset[int]]:
    """Yield every spanning tree (as a set of edge ids) containing ``required``.

    Include/exclude recursion over the edge list; a branch is only entered if it
    can still produce a spanning tree, so no work is spent on dead ends.
    """
    n = g.node_count
    if n > budget.max_nodes:
        raise BudgetError(f"graph has {n} nodes, enumeration cap is {budget.max_nodes}")
    edges = g.edges
    dsu = _UndoDSU(n)
    chosen = sorted(set(required))
    for eid in chosen:
        if not dsu.union(edges[eid].u, edges[eid].v):
            return
    seeded = set(chosen)
    rest = [e.id for e in edges if e.id not in seeded]
    if not _can_connect(dsu, n, edges, rest):
        return
    count = 0

    def walk(k):
        nonlocal count
        if len(chosen) == n - 1:
            count += 1
            if count > budget.max_trees:
                raise BudgetError(f"more than {budget.max_trees} spanning trees")
            yield frozenset(chosen)
            return
        eid = rest[k]
        if dsu.union(edges[eid].u, edges[eid].v):
            chosen.append(eid)
            yield from walk(k + 1)
            chosen.pop()
            dsu.undo()
        if _can_connect(dsu, n, edges, rest[k + 1:]):
            yield from walk(k + 1)

    yield from walk(0)


def brute_min_tree(
    g: Graph,
    imposed: Iterable[int] = (),
    budget: EnumerationBudget = EnumerationBudget(),
) -> Optional[tuple[int, frozenset[int]]]:
    """Cheapest tree containing ``imposed``, or None when none exists.

    Ties go to the lexicographically smallest sorted edge-id tuple.
    """
    best = None
    for tree in enumerate_spanning_trees(g, budget, imposed):
        key = (sum(g.edges[e].cost for e in tree), sorted(tree))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return best[0], frozenset(best[1])


def brute_min_costs(
    g: Graph,
    candidates: Iterable[int],
    max_size: int,
    budget: EnumerationBudget = EnumerationBudget(),
) -> dict[frozenset[int], int]:
    """Minimum tree cost for every subset of ``candidates`` up to ``max_size`` edges.

    One enumeration pass serves all subsets. Subsets absent from the result are
    contained in no spanning tree.
    """
    pool = frozenset(candidates)
    best: dict[frozenset[int], int] = {}
    for tree in enumerate_spanning_trees(g, budget):
        cost = sum(g.edges[e].cost for e in tree)
        hit = sorted(tree & pool)
        for size in range(min(max_size, len(hit)) + 1):
            for subset in combinations(hit, size):
                key = frozenset(subset)
                if cost < best.get(key, cost + 1):
                    best[key] = cost
    return best
