import itertools
import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import DiGraphMatcher, categorical_edge_match

from symiso.errors import BudgetExceeded
from symiso.polynorm import l1_norm, linf_norm
from symiso.symcore import Graph, GroupCase, build_symmetric_graph, edge_orbits
from symiso.treepack import TreeMode, check_admissible, find_tree_pair
from symiso.verify import (ExperimentReport, canonical_form, enumerate_admissible, enumerate_instances,
                           equivalence_experiment, forced_edge_classes, oracle_tree_decomposition,
                           realizable_colourings)
from symiso.placement import taus_for

from conftest import load, sym

# classes per exact vertex count; the brute-force counter below reproduces n <= 6
INSTANCES = {4: 2, 5: 6, 6: 30, 7: 174}
INSTANCES_C4 = {4: 1, 5: 1, 6: 3, 7: 7}
ADMISSIBLE = {
    GroupCase.CS_PRESERVING: {4: 0, 5: 1, 6: 0, 7: 7},
    GroupCase.CS_SWAPPING: {4: 0, 5: 1, 6: 3, 7: 13},
    GroupCase.C2: {4: 1, 5: 1, 6: 4, 7: 7},
    GroupCase.C4: {4: 1, 5: 1, 6: 0, 7: 0},
}


def brute_force_classes(n, order):
    """Equivariant isomorphism classes by networkx matching over all labelled instances."""
    pairs = list(itertools.combinations(range(n), 2))
    ident = list(range(n))
    perms = []
    for perm in itertools.permutations(range(n)):
        q, k = [perm[x] for x in ident], 1
        while q != ident:
            q, k = [perm[x] for x in q], k + 1
        if k == order:
            perms.append(perm)
    buckets = {}
    match = categorical_edge_match("t", 0)
    for es in itertools.combinations(pairs, 2 * n - 2):
        g = nx.Graph(es)
        if g.number_of_nodes() < n or min(d for _, d in g.degree()) < 2 or not nx.is_connected(g):
            continue
        eset = set(es)
        for perm in perms:
            if not all(tuple(sorted((perm[u], perm[w]))) in eset for u, w in es):
                continue
            d = nx.DiGraph()
            for u, w in es:
                d.add_edge(u, w, t=1)
                d.add_edge(w, u, t=1)
            for v in range(n):
                if d.has_edge(v, perm[v]):
                    d[v][perm[v]]["t"] += 2
                else:
                    d.add_edge(v, perm[v], t=2)
            key = (tuple(sorted(dict(g.degree()).values())), sum(perm[v] == v for v in range(n)))
            bucket = buckets.setdefault(key, [])
            if not any(DiGraphMatcher(d, r, edge_match=match).is_isomorphic() for r in bucket):
                bucket.append(d)
    return sum(len(b) for b in buckets.values())


def test_oracle_on_named_graphs():
    assert oracle_tree_decomposition(load("w5")[0].graph)
    k4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
    assert oracle_tree_decomposition(k4)  # regression value: K4 splits into two paths
    assert not oracle_tree_decomposition(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert not oracle_tree_decomposition(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_oracle_agrees_with_search_on_atlas():
    checked = 0
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if h.number_of_edges() != 2 * n - 2:
            continue
        g = Graph.from_edges(n, h.edges())
        sg = build_symmetric_graph(g, GroupCase.C2, {v: v for v in range(n)})
        assert oracle_tree_decomposition(g) == (find_tree_pair(sg, TreeMode.INVARIANT) is not None)
        checked += 1
    assert checked == 150


def test_oracle_agrees_with_search_on_eight_vertices():
    rng = random.Random(8)
    pairs = list(itertools.combinations(range(8), 2))
    for _ in range(300):
        g = Graph.from_edges(8, rng.sample(pairs, 14))
        sg = build_symmetric_graph(g, GroupCase.C2, {v: v for v in range(8)})
        assert oracle_tree_decomposition(g) == (find_tree_pair(sg, TreeMode.INVARIANT) is not None)


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("order", [2, 4])
def test_enumeration_matches_brute_force(n, order):
    case = GroupCase.C4 if order == 4 else GroupCase.C2
    expected = (INSTANCES_C4 if order == 4 else INSTANCES)[n]
    assert brute_force_classes(n, order) == expected
    assert len(enumerate_instances(n, case, n_min=n)) == expected


@pytest.mark.parametrize("case", list(GroupCase))
def test_frozen_counts(case):
    table = INSTANCES_C4 if case is GroupCase.C4 else INSTANCES
    for n in range(4, 8):
        found = enumerate_instances(n, case, n_min=n)
        assert len(found) == table[n]
        assert sum(check_admissible(sg).admissible for sg in found) == ADMISSIBLE[case][n]


def test_canonical_form_is_invariant_under_relabelling():
    rng = random.Random(3)
    for sg in enumerate_instances(6, GroupCase.CS_SWAPPING, n_min=6):
        perm = list(range(6))
        rng.shuffle(perm)
        m = dict(enumerate(perm))
        moved = build_symmetric_graph(Graph.from_edges(6, [(m[u], m[w]) for u, w in sg.graph.edges]),
                                      sg.case, {m[v]: m[sg.generator[v]] for v in range(6)})
        assert canonical_form(moved) == canonical_form(sg)


def test_enumerated_instances_revalidate():
    for sg in enumerate_admissible(7, GroupCase.C2):
        again = build_symmetric_graph(sg.graph, sg.case, sg.generator)
        assert check_admissible(again).admissible
        assert sg.is_faithful()


def test_minimal_admissible_reflection_instance():
    found = enumerate_admissible(5, GroupCase.CS_PRESERVING)
    assert len(found) == 1
    (sg,) = found
    assert sorted(sg.graph.adjacency[v].__len__() for v in sg.graph.vertices) == [3, 3, 3, 3, 4]
    assert sorted(len(o) for o in edge_orbits(sg).edge_orbits) == [2, 2, 2, 2]


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_instances(12, GroupCase.C2)


def test_one_fixed_edge_has_no_realisable_colouring():
    # a reflection instance with one fixed edge: the edge would have to lie on the mirror
    # and in both trees' orbit structure at once
    for sg in enumerate_instances(6, GroupCase.CS_PRESERVING, fixed_counts=[1]):
        assert not check_admissible(sg).admissible
        assert next(realizable_colourings(sg, linf_norm()), None) is None


def test_forced_classes_follow_the_fixed_lines():
    sg = sym(4, list(itertools.combinations(range(4), 2)), "C2", [1, 0, 3, 2])
    tau = taus_for(GroupCase.C2, linf_norm())[0]
    # under the half-turn every direction is reversed, so nothing is forced
    assert forced_edge_classes(sg, linf_norm(), tau) == {}
    refl = sym(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], "CsPreserving", [0, 3, 2, 1])
    for tau in taus_for(GroupCase.CS_PRESERVING, linf_norm()):
        forced = forced_edge_classes(refl, linf_norm(), tau)
        assert set(forced) == {(0, 2)}


def test_report_invariant_and_summary():
    rep = equivalence_experiment(5, GroupCase.C2, l1_norm())
    assert rep.agreements + len(rep.counterexamples) == rep.instances == 8
    assert rep.counterexamples == []
    text = rep.summary()
    assert "counterexamples 0" in text and "instances 8" in text
    other = ExperimentReport(GroupCase.C2, 5, l1_norm(), instances=1, agreements=1)
    rep.merge(other)
    assert rep.instances == 9


def test_workers_give_the_same_report():
    a = equivalence_experiment(6, GroupCase.CS_SWAPPING, linf_norm(), workers=1)
    b = equivalence_experiment(6, GroupCase.CS_SWAPPING, linf_norm(), workers=2)
    assert (a.instances, a.admissible, a.agreements) == (b.instances, b.admissible, b.agreements)
