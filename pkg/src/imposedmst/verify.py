"""Property checks comparing the solvers against the brute-force oracle.

Each ``check_*`` returns a list of human-readable violations; empty means pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .bound import lower_bound
from .errors import InfeasibleError
from .graph import Graph
from .imposition import ImpositionState, impose_all, impose_edge
from .mst import SpanningTree, constrained_mst, minimum_spanning_tree
from .oracle import EnumerationBudget, brute_min_costs, brute_min_tree, enumerate_spanning_trees
from .tree import INF, check_cut_optimality, check_path_optimality, replacement_table


def check_theorem1(g: Graph, budget: EnumerationBudget) -> list[str]:
    """Path optimality, cut optimality and oracle minimality must coincide on every tree."""
    trees = [SpanningTree.from_edges(g, ids) for ids in enumerate_spanning_trees(g, budget)]
    best = min(t.total_cost for t in trees)
    bad = []
    for t in trees:
        verdicts = (check_path_optimality(t), check_cut_optimality(t), t.total_cost == best)
        if len(set(verdicts)) != 1:
            bad.append(f"tree {sorted(t.tree_edges)}: path/cut/minimal = {verdicts}")
    return bad


def check_mst_agreement(g: Graph, budget: EnumerationBudget) -> list[str]:
    t = minimum_spanning_tree(g)
    cost, _ = brute_min_tree(g, (), budget)
    if t.total_cost != cost:
        return [f"mst cost {t.total_cost} != oracle {cost}"]
    return []


def check_replacement_tightness(g: Graph, budget: EnumerationBudget) -> list[str]:
    """Imposing one nontree edge costs exactly its replacement cost, and is optimal."""
    base = ImpositionState.initial(g)
    table = replacement_table(base.tree, frozenset())
    oracle = brute_min_costs(g, table, 1, budget)
    bad = []
    for eid, r in table.items():
        swapped = impose_edge(base, eid).total_cost
        want = base.total_cost + r.r_cost
        if not swapped == want == oracle[frozenset({eid})]:
            bad.append(
                f"edge {eid}: swap {swapped}, base+r_cost {want}, "
                f"oracle {oracle[frozenset({eid})]}"
            )
    return bad


@dataclass
class SequenceStep:
    sequence: tuple[int, ...]
    before: ImpositionState
    after: ImpositionState


@dataclass
class SequenceWalk:
    steps: list[SequenceStep] = field(default_factory=list)
    blocked: list[tuple[ImpositionState, int]] = field(default_factory=list)


def walk_sequences(g: Graph, max_len: int) -> SequenceWalk:
    """Impose every ordered sequence of distinct base nontree edges up to ``max_len``.

    Prefixes are shared. Impositions rejected as infeasible are recorded in
    ``blocked`` and not extended.
    """
    root = ImpositionState.initial(g)
    pool = root.tree.nontree_edges()
    walk = SequenceWalk()

    def extend(state, seq):
        if len(seq) == max_len:
            return
        for eid in pool:
            if eid in state.imposed:
                continue
            try:
                nxt = impose_edge(state, eid)
            except InfeasibleError:
                walk.blocked.append((state, eid))
                continue
            walk.steps.append(SequenceStep(seq + (eid,), state, nxt))
            extend(nxt, seq + (eid,))

    extend(root, ())
    return walk


def _tables(states: Iterator[ImpositionState]):
    cache = {}
    for s in states:
        if id(s) not in cache:
            cache[id(s)] = (s, replacement_table(s.tree, s.imposed))
    return cache


def check_monotonicity(g: Graph, walk: SequenceWalk) -> list[str]:
    """r_cost of a surviving nontree, non-imposed edge never drops after an imposition.

    Checked step by step and against the base tree.
    """
    if not walk.steps:
        return []
    base = ImpositionState.initial(g)
    base_table = replacement_table(base.tree, frozenset())
    tables = _tables(s for step in walk.steps for s in (step.before, step.after))
    bad = []
    for step in walk.steps:
        before = tables[id(step.before)][1]
        after = tables[id(step.after)][1]
        for eid, r in after.items():
            if eid in step.after.imposed:
                continue
            for label, ref in (("step", before), ("base", base_table)):
                if eid in ref and not r.r_cost >= ref[eid].r_cost:
                    bad.append(
                        f"seq {step.sequence} edge {eid}: r_cost {r.r_cost} "
                        f"< {label} {ref[eid].r_cost}"
                    )
    return bad


def check_infinite_case(g: Graph, walk: SequenceWalk, budget: EnumerationBudget) -> tuple[list[str], int]:
    """Every Infinite replacement must block imposition and admit no spanning tree.

    Returns (violations, number of Infinite cases examined).
    """
    states = {id(s): s for step in walk.steps for s in (step.before, step.after)}
    bad = []
    seen = 0
    for s in states.values():
        for eid, r in replacement_table(s.tree, s.imposed).items():
            if r.r_cost is not INF:
                continue
            seen += 1
            try:
                impose_edge(s, eid)
                bad.append(f"imposed {sorted(s.imposed)} + {eid}: accepted an infinite replacement")
            except InfeasibleError:
                pass
            if brute_min_tree(g, s.imposed | {eid}, budget) is not None:
                bad.append(f"imposed {sorted(s.imposed)} + {eid}: oracle found a tree")
    for s, eid in walk.blocked:
        r = replacement_table(s.tree, s.imposed)[eid]
        if r.r_cost is not INF:
            bad.append(f"imposed {sorted(s.imposed)} + {eid}: rejected with finite r_cost")
    return bad, seen


def nontree_subsets(g: Graph, max_size: int) -> list[frozenset[int]]:
    pool = minimum_spanning_tree(g).nontree_edges()
    return [
        frozenset(c) for size in range(1, max_size + 1) for c in combinations(pool, size)
    ]


def check_bound_soundness(
    g: Graph, budget: EnumerationBudget, max_size: int
) -> tuple[list[str], int]:
    """lower_bound <= oracle optimum for every feasible nontree subset.

    Returns (violations, number of strict cases where the bound is below the optimum).
    """
    subsets = nontree_subsets(g, max_size)
    oracle = brute_min_costs(g, set().union(*subsets) if subsets else (), max_size, budget)
    bad = []
    strict = 0
    for imposed in subsets:
        if imposed not in oracle:
            continue
        report = lower_bound(g, imposed, compute_exact=False)
        exact = oracle[imposed]
        if report.lower_bound is INF or report.lower_bound > exact:
            bad.append(f"I={sorted(imposed)}: bound {report.lower_bound} > optimum {exact}")
        elif report.lower_bound < exact:
            strict += 1
    return bad, strict


def check_swap_contraction(
    g: Graph, budget: EnumerationBudget, max_size: int
) -> list[str]:
    """Swap-built and contraction-built I-trees agree on cost, in both orders, with the oracle."""
    subsets = nontree_subsets(g, max_size)
    oracle = brute_min_costs(g, set().union(*subsets) if subsets else (), max_size, budget)
    bad = []
    for imposed in subsets:
        order = sorted(imposed)
        costs = []
        for seq in (order, order[::-1]):
            try:
                costs.append(impose_all(g, seq).total_cost)
            except InfeasibleError:
                costs.append(None)
        try:
            costs.append(constrained_mst(g, imposed).total_cost)
        except InfeasibleError:
            costs.append(None)
        costs.append(oracle.get(imposed))
        if len(set(costs)) != 1:
            bad.append(f"I={order}: swap/swap-reversed/contraction/oracle = {costs}")
    return bad


def check_graph(g: Graph, budget: EnumerationBudget) -> list[tuple[str, list[str], str]]:
    """Run the full suite on one graph: (property, violations, note) per check."""
    walk = walk_sequences(g, 3)
    infinite_bad, infinite_seen = check_infinite_case(g, walk, budget)
    sound_bad, strict = check_bound_soundness(g, budget, 4)
    return [
        ("theorem1", check_theorem1(g, budget), ""),
        ("mst_oracle", check_mst_agreement(g, budget), ""),
        ("replacement_tightness", check_replacement_tightness(g, budget), ""),
        ("monotonicity", check_monotonicity(g, walk), f"{len(walk.steps)} steps"),
        ("infinite_case", infinite_bad, f"{infinite_seen} infinite"),
        ("bound_soundness", sound_bad, f"{strict} strict"),
        ("swap_contraction", check_swap_contraction(g, budget, 4), ""),
    ]
