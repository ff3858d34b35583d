import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from symiso.symcore import Graph, GroupCase, build_symmetric_graph, edge
from symiso.treepack import (FailureReason, TreeMode, TreePair, check_admissible, find_tree_pair,
                             fixed_edge_count, fixed_edge_rule, is_valid_tree_pair, iter_tree_pairs,
                             mode_for_case, tree_pair_problems)

from conftest import load, sym

K4 = list(itertools.combinations(range(4), 2))


def brute_force_pairs(sg, mode):
    """Every symmetric packing, by trying all edge subsets of size n-1."""
    g = sg.graph
    edges = g.sorted_edges()
    if len(edges) != 2 * g.n - 2:
        return []
    out = []
    for t1 in itertools.combinations(edges, g.n - 1):
        t1 = set(t1)
        t2 = set(edges) - t1
        trees = [nx.Graph(list(t)) for t in (t1, t2)]
        if not all(t.number_of_nodes() == g.n and nx.is_tree(t) for t in trees):
            continue
        if mode is TreeMode.INVARIANT:
            ok = all(sg.act_edge(e) in t1 for e in t1)
        else:
            ok = all(sg.act_edge(e) in t2 for e in t1)
        if ok:
            out.append((frozenset(t1), frozenset(t2)))
    return out


def test_w5_textbook_pair_validates(w5):
    t1 = {edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 4)}
    t2 = {edge(1, 2), edge(2, 0), edge(0, 4), edge(4, 3)}
    pair = TreePair(frozenset(t1), frozenset(t2), TreeMode.INVARIANT)
    assert is_valid_tree_pair(w5, pair)
    assert is_valid_tree_pair(w5, find_tree_pair(w5, TreeMode.INVARIANT))


def test_validator_reports_problems(w5):
    t1 = {edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 2)}
    t2 = set(w5.graph.edges) - t1
    problems = tree_pair_problems(w5, TreePair(frozenset(t1), frozenset(t2), TreeMode.INVARIANT))
    assert "tree1 is not a spanning tree" in problems
    half = {edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 4)}
    problems = tree_pair_problems(w5, TreePair(frozenset(half), frozenset(half), TreeMode.INVARIANT))
    assert "trees share edges" in problems


def test_k4_involutions_never_admissible_as_reflections():
    g = Graph.from_edges(4, K4)
    seen = 0
    for perm in itertools.permutations(range(4)):
        if perm == (0, 1, 2, 3) or any(perm[perm[i]] != i for i in range(4)):
            continue
        sg = build_symmetric_graph(g, GroupCase.CS_PRESERVING, dict(enumerate(perm)))
        assert not check_admissible(sg).admissible
        seen += 1
    assert seen == 9


def test_k4_double_swap_is_a_half_turn_instance():
    sg = sym(4, K4, "C2", [1, 0, 3, 2])
    rep = check_admissible(sg)
    assert rep.admissible and rep.fixed_edge_count == 2


def test_wrong_edge_count():
    sg = sym(4, [(0, 1), (1, 2), (2, 3)], "C2", [0, 1, 2, 3])
    assert find_tree_pair(sg, TreeMode.INVARIANT) is None
    rep = check_admissible(sg)
    assert rep.failure_reason is FailureReason.EDGE_COUNT


def test_fixed_edge_rule():
    assert fixed_edge_rule(GroupCase.CS_PRESERVING, 0)
    assert not fixed_edge_rule(GroupCase.CS_SWAPPING, 2)
    assert [c for c in range(4) if fixed_edge_rule(GroupCase.C2, c)] == [0, 2]
    assert [c for c in range(4) if fixed_edge_rule(GroupCase.C4, c)] == [0, 2]


def test_fixed_edge_rule_failure_reported():
    # W5 plus a fixed chord through the hub is impossible, so use K4 as a reflection
    sg = sym(4, K4, "CsPreserving", [1, 0, 3, 2])
    assert check_admissible(sg).failure_reason is FailureReason.FIXED_EDGE_RULE


def test_modes():
    assert mode_for_case(GroupCase.C2) is TreeMode.INVARIANT
    assert mode_for_case(GroupCase.C4) is TreeMode.SWAPPED
    assert mode_for_case(GroupCase.CS_SWAPPING) is TreeMode.SWAPPED


@pytest.mark.parametrize("name,count", [("w5", 0), ("mirror_swap6", 0), ("halfturn7", 0), ("quarterturn8", 2)])
def test_bundled_instances_admissible(name, count):
    sg = load(name)[0]
    rep = check_admissible(sg)
    assert rep.admissible
    assert rep.fixed_edge_count == fixed_edge_count(sg) == count
    assert is_valid_tree_pair(sg, rep.tree_pair)
    assert rep.tree_pair.mode is mode_for_case(sg.case)


def test_swapped_pair_maps_trees_onto_each_other():
    sg = load("mirror_swap6")[0]
    for pair in iter_tree_pairs(sg, TreeMode.SWAPPED):
        assert {sg.act_edge(e) for e in pair.tree1} == pair.tree2


def test_all_pairs_match_brute_force():
    for name in ("w5", "mirror_swap6", "halfturn7"):
        sg = load(name)[0]
        mode = mode_for_case(sg.case)
        found = {(p.tree1, p.tree2) for p in iter_tree_pairs(sg, mode)}
        assert found == set(brute_force_pairs(sg, mode))


@st.composite
def involutive_graphs(draw):
    n = draw(st.integers(4, 7))
    fixed = draw(st.integers(1 if n % 2 else 0, n))
    if (n - fixed) % 2:
        fixed += 1
    gen = list(range(n))
    for i in range(fixed, n, 2):
        gen[i], gen[i + 1] = i + 1, i
    orbits = sorted({edge(u, w) if edge(u, w) < edge(gen[u], gen[w]) else edge(gen[u], gen[w])
                     for u, w in itertools.combinations(range(n), 2)})
    # shuffle the orbits and fill greedily up to 2n - 2 edges
    order = draw(st.permutations(orbits))
    edges = set()
    for u, w in order:
        orbit = {edge(u, w), edge(gen[u], gen[w])}
        if len(edges) + len(orbit) <= 2 * n - 2:
            edges |= orbit
    return build_symmetric_graph(Graph.from_edges(n, edges), GroupCase.C2, dict(enumerate(gen)))


@settings(max_examples=100, deadline=None)
@given(involutive_graphs(), st.sampled_from(list(TreeMode)))
def test_search_agrees_with_brute_force(sg, mode):
    # parity can leave the greedy fill one edge short; those cases must find nothing
    expected = brute_force_pairs(sg, mode)
    pair = find_tree_pair(sg, mode)
    assert (pair is not None) == bool(expected)
    if pair is not None:
        assert (pair.tree1, pair.tree2) in expected
