import pytest
from hypothesis import given, settings, strategies as st

from imposedmst.bound import Contribution, lower_bound
from imposedmst.errors import InfeasibleError
from imposedmst.mst import minimum_spanning_tree
from imposedmst.oracle import brute_min_tree

from .conftest import connected_graphs


def test_g1_bound(g1):
    r = lower_bound(g1, {3, 4})
    assert r.base_cost == 6
    assert r.contributions == (Contribution(3, 2, 1), Contribution(4, 1, 3))
    assert (r.lower_bound, r.exact_cost, r.gap) == (10, 10, 0)


def test_bound_is_strict_on_shared_replacement(path4):
    # both chords replace the same middle edge, but only one can remove it
    r = lower_bound(path4, {3, 4})
    assert r.base_cost == 12
    assert [c.r_cost for c in r.contributions] == [1, 1]
    assert (r.lower_bound, r.exact_cost, r.gap) == (14, 23, 9)


def test_empty_imposed(g1):
    r = lower_bound(g1, set())
    assert r.contributions == ()
    assert r.lower_bound == r.base_cost == r.exact_cost == 6
    assert r.gap == 0


def test_tree_edges_contribute_zero(g1):
    r = lower_bound(g1, {0, 3})
    assert r.contributions[0] == Contribution(0, None, 0)
    assert r.lower_bound == 7


def test_without_exact(g1):
    r = lower_bound(g1, {3}, compute_exact=False)
    assert r.lower_bound == 7 and r.exact_cost is None and r.gap is None


def test_infeasible(triangle):
    with pytest.raises(InfeasibleError):
        lower_bound(triangle, {0, 1, 2})


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_nodes=6), st.data())
def test_bound_sound_and_tight_for_one_edge(g, data):
    nontree = minimum_spanning_tree(g).nontree_edges()
    if not nontree:
        return
    imposed = data.draw(st.sets(st.sampled_from(nontree), max_size=4))
    best = brute_min_tree(g, imposed)
    if best is None:
        with pytest.raises(InfeasibleError):
            lower_bound(g, imposed)
        return
    r = lower_bound(g, imposed)
    assert r.exact_cost == best[0]
    assert r.lower_bound <= r.exact_cost
    assert r.gap == r.exact_cost - r.lower_bound
    if len(imposed) == 1:
        assert r.gap == 0


@settings(max_examples=200, deadline=None)
@given(connected_graphs(), st.data())
def test_adding_tree_edges_keeps_bound(g, data):
    t = minimum_spanning_tree(g)
    nontree = t.nontree_edges()
    if not nontree or not t.tree_edges:
        return
    imposed = data.draw(st.sets(st.sampled_from(nontree), max_size=3))
    extra = data.draw(st.sets(st.sampled_from(sorted(t.tree_edges)), min_size=1))
    try:
        plain = lower_bound(g, imposed, compute_exact=False)
        mixed = lower_bound(g, imposed | extra, compute_exact=False)
    except InfeasibleError:
        return
    assert mixed.lower_bound == plain.lower_bound
