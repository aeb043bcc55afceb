"""Seeded random connected multigraphs for property checks."""

from __future__ import annotations

import random

from .graph import Graph


def random_connected_graph(
    rng: random.Random, n: int, m: int, low: int = 1, high: int = 100
) -> Graph:
    """n nodes, m edges, costs uniform in [low, high]; parallel edges may occur."""
    if n < 1 or m < n - 1:
        raise ValueError(f"cannot build a connected graph with n={n}, m={m}")
    if n == 1 and m > 0:
        raise ValueError("a single node admits no edges without self-loops")
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(pairs) < m:
        u, v = rng.sample(range(n), 2)
        pairs.append((u, v))
    rng.shuffle(pairs)
    return Graph.from_edges(n, [(u, v, rng.randint(low, high)) for u, v in pairs])
