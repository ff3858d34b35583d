import itertools

import pytest
from hypothesis import given, strategies as st

from symiso.errors import InvalidGraph, LemmaViolation, NotAutomorphism, PreconditionViolated, WrongOrder
from symiso.symcore import (Graph, GroupCase, build_symmetric_graph, edge, edge_orbits, fixed_elements,
                            neighborhood_intersection, relabel, symmetric_neighborhood)

from conftest import load, sym

W5 = [(1, 2), (2, 3), (3, 4), (1, 4), (0, 1), (0, 2), (0, 3), (0, 4)]

# neighbourhood-intersection examples, one per size, found by enumeration and frozen
INTERSECTION = {
    0: ([(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 8),
         (3, 7), (4, 8), (5, 7), (6, 8)], [0, 2, 1, 4, 3, 6, 5, 8, 7], 7),
    1: ([(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (4, 6)],
        [0, 2, 1, 4, 3, 6, 5], 1),
    2: ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (4, 6)],
        [0, 2, 1, 4, 3, 6, 5], 5),
    3: ([(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)], [0, 2, 1, 4, 3], 1),
}


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidGraph):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidGraph):
        Graph.from_edges(2, [(0, 5)])


def test_w5_half_turn_is_valid():
    sg = sym(5, W5, "C2", [0, 3, 4, 1, 2])
    assert sg.order == 2 and sg.is_faithful()


def test_identity_is_accepted_for_every_case():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    for case in GroupCase:
        sg = build_symmetric_graph(g, case, {v: v for v in g.vertices})
        assert not sg.is_faithful()


def test_three_cycle_has_wrong_order():
    with pytest.raises(WrongOrder):
        sym(3, [(0, 1), (1, 2), (0, 2)], "C2", [1, 2, 0])


def test_non_automorphism_rejected():
    with pytest.raises(NotAutomorphism):
        sym(5, W5, "CsPreserving", [0, 2, 1, 3, 4])
    with pytest.raises(NotAutomorphism):
        sym(3, [(0, 1)], "C2", [0, 0, 2])


def test_fixed_elements(w5):
    assert fixed_elements(w5) == ({0}, frozenset())
    k2 = sym(2, [(0, 1)], "C2", [0, 1])
    assert fixed_elements(k2) == ({0, 1}, {(0, 1)})


def test_quarter_turn_square_power_two():
    sg = load("quarterturn8")[0]
    verts, edges = fixed_elements(sg, 2)
    assert verts == frozenset()
    assert edges == {(0, 2), (1, 3)}
    assert fixed_elements(sg, 1)[1] == frozenset()
    with pytest.raises(ValueError):
        fixed_elements(sg, 4)


def test_edge_orbits(w5):
    orbits = edge_orbits(w5).edge_orbits
    assert sorted(len(o) for o in orbits) == [2, 2, 2, 2]
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    ident = build_symmetric_graph(g, GroupCase.C2, {v: v for v in range(4)})
    assert all(len(o) == 1 for o in edge_orbits(ident).edge_orbits)
    c4 = edge_orbits(load("quarterturn8")[0])
    assert sorted(len(o) for o in c4.edge_orbits) == [2, 4, 4, 4]
    assert {(0, 2), (1, 3)} in [set(o) for o in c4.edge_orbits]


def test_symmetric_neighborhood(w5):
    assert symmetric_neighborhood(w5, 1) == w5.graph
    pendant = sym(3, [(0, 1), (1, 2)], "CsPreserving", [0, 1, 2])
    assert symmetric_neighborhood(pendant, 0) == Graph.from_edges([0, 1], [(0, 1)])


@pytest.mark.parametrize("k", sorted(INTERSECTION))
def test_neighborhood_intersection_sizes(k):
    edges, action, v = INTERSECTION[k]
    sg = sym(len(action), edges, "CsPreserving", action)
    assert neighborhood_intersection(sg, v) == k


def test_intersection_preconditions():
    # N(v) and N(sv) form an s-invariant set, so odd sizes always hold a fixed vertex;
    # what can go wrong is a fixed 3-valent vertex or a vertex of another degree
    claw = sym(4, [(0, 1), (0, 2), (0, 3)], "CsPreserving", [0, 2, 1, 3])
    with pytest.raises(LemmaViolation):
        neighborhood_intersection(claw, 0)
    with pytest.raises(PreconditionViolated):
        neighborhood_intersection(claw, 1)
    with pytest.raises(PreconditionViolated):
        neighborhood_intersection(load("quarterturn8")[0], 0)


def test_w5_has_a_unique_fixed_edge_free_involution():
    # exhaust all 120 vertex maps of W5
    g = Graph.from_edges(5, W5)
    found = []
    for perm in itertools.permutations(range(5)):
        gen = dict(enumerate(perm))
        if perm == tuple(range(5)):
            continue
        try:
            sg = build_symmetric_graph(g, GroupCase.CS_PRESERVING, gen)
        except (NotAutomorphism, WrongOrder):
            continue
        if not fixed_elements(sg)[1]:
            found.append(perm)
    assert found == [(0, 3, 4, 1, 2)]


@given(st.permutations(range(6)))
def test_relabel_preserves_orbit_structure(perm):
    sg = load("mirror_swap6")[0]
    mapping = dict(enumerate(perm))
    moved = relabel(sg, mapping)
    assert moved.graph.m == sg.graph.m
    before = sorted(len(o) for o in edge_orbits(sg).edge_orbits)
    after = sorted(len(o) for o in edge_orbits(moved).edge_orbits)
    assert before == after
    assert all(moved.act(mapping[v]) == mapping[sg.act(v)] for v in range(6))


def test_edge_is_normalised():
    assert edge(3, 1) == (1, 3) == edge(1, 3)
