import pytest
from hypothesis import given, settings, strategies as st

from symiso.construct import (ExtensionMove, MoveKind, W5_EDGES, apply_move, build_chain, hat_graph,
                              reduce_step, replay, w5_base)
from symiso.errors import NotAdmissible, PreconditionViolated
from symiso.symcore import edge, fixed_elements
from symiso.treepack import check_admissible, is_valid_tree_pair

from conftest import load, sym

# six-vertex half-turn instance with two fixed edges, found by enumeration
TWO_FIXED = ([(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3)],
             [1, 0, 3, 2, 5, 4])


def zero_ext_graph():
    base, _ = w5_base()
    return apply_move(base, ExtensionMove(MoveKind.ZERO, (1, 2), (5, 6)))


def test_w5_base():
    sg, pair = w5_base()
    assert (sg.graph.n, sg.graph.m) == (5, 8)
    assert fixed_elements(sg) == ({0}, frozenset())
    assert pair.tree1 == {edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 4)}
    assert is_valid_tree_pair(sg, pair)
    assert set(sg.graph.edges) == {edge(*e) for e in W5_EDGES}


def test_zero_extension_counts():
    g = zero_ext_graph()
    assert (g.graph.n, g.graph.m) == (7, 12)
    assert g.graph.neighbors(5) == {1, 2}
    assert g.graph.neighbors(6) == {3, 4}
    assert check_admissible(g).admissible


def test_one_extension_removes_the_edge():
    base, _ = w5_base()
    g = apply_move(base, ExtensionMove(MoveKind.ONE, (1, 2, 3), (5, 6)))
    assert (g.graph.n, g.graph.m) == (7, 12)
    assert not g.graph.has_edge(1, 2) and not g.graph.has_edge(3, 4)
    assert check_admissible(g).admissible


def test_modified_one_extension_removes_v1_sv2():
    base, _ = w5_base()
    move = ExtensionMove(MoveKind.MODIFIED_ONE, (1, 2, 0), (5, 6))
    assert move.removed_edge(base) == (1, 4)
    g = apply_move(base, move)
    assert not g.graph.has_edge(1, 4) and not g.graph.has_edge(2, 3)
    assert g.graph.neighbors(5) == {0, 1, 2}


def test_fixed_vertex_to_wheel():
    base, _ = w5_base()
    # hub 0 has degree 4; rim neighbours go to the new rim vertices
    attach = ((1, 5), (2, 6), (3, 7), (4, 8))
    g = apply_move(base, ExtensionMove(MoveKind.FIXED_VERTEX_TO_W5, (0,), (5, 6, 7, 8), attach))
    assert (g.graph.n, g.graph.m) == (9, 16)
    assert g.graph.degree(0) == 4
    assert check_admissible(g).admissible


def test_precondition_clauses_are_named():
    base, _ = w5_base()
    with pytest.raises(PreconditionViolated, match="new vertex ids"):
        apply_move(base, ExtensionMove(MoveKind.ZERO, (1, 2), (3, 6)))
    with pytest.raises(PreconditionViolated, match="not an edge"):
        apply_move(base, ExtensionMove(MoveKind.ONE, (1, 3, 2), (5, 6)))
    with pytest.raises(PreconditionViolated, match="v0 must be fixed"):
        apply_move(base, ExtensionMove(MoveKind.FIXED_VERTEX_TO_W5, (1,), (5, 6, 7, 8)))


def test_reduce_step_inverts_zero_extension():
    g = zero_ext_graph()
    h, move, pair = reduce_step(g, check_admissible(g).tree_pair)
    assert h.graph == w5_base()[0].graph
    assert move.kind is MoveKind.ZERO
    assert is_valid_tree_pair(h, pair)
    assert apply_move(h, move).graph == g.graph


def test_chains():
    assert len(build_chain(w5_base()[0])) == 0
    chain = build_chain(zero_ext_graph())
    assert len(chain) == 1
    assert replay(chain).graph == zero_ext_graph().graph


def test_chain_for_bundled_half_turn():
    sg = load("halfturn7")[0]
    chain = build_chain(sg)
    assert replay(chain).graph == sg.graph
    for h, pair in zip(chain.intermediates(), chain.certified_intermediates):
        assert is_valid_tree_pair(h, pair)


def test_chain_refuses_fixed_edges():
    with pytest.raises(NotAdmissible):
        build_chain(sym(6, *TWO_FIXED[:1], "C2", TWO_FIXED[1]))


def test_hat_graph():
    sg = sym(6, TWO_FIXED[0], "C2", TWO_FIXED[1])
    rep = check_admissible(sg)
    assert rep.fixed_edge_count == 2
    hat, hat_pair, w0 = hat_graph(sg, rep.tree_pair)
    assert (hat.graph.n, hat.graph.m) == (7, 12)
    assert hat.act(w0) == w0
    assert fixed_elements(hat)[1] == frozenset()
    assert is_valid_tree_pair(hat, hat_pair)
    assert replay(build_chain(hat)).graph == hat.graph
    with pytest.raises(PreconditionViolated):
        hat_graph(w5_base()[0], w5_base()[1])


@st.composite
def random_chains(draw):
    sg, _ = w5_base()
    for _ in range(draw(st.integers(1, 3))):
        verts = sorted(sg.graph.vertices)
        n = max(verts) + 1
        if draw(st.booleans()):
            a, b = draw(st.lists(st.sampled_from(verts), min_size=2, max_size=2, unique=True))
            move = ExtensionMove(MoveKind.ZERO, (a, b), (n, n + 1))
        else:
            e = draw(st.sampled_from(sg.graph.sorted_edges()))
            c = draw(st.sampled_from([v for v in verts if v not in e]))
            move = ExtensionMove(MoveKind.ONE, (e[0], e[1], c), (n, n + 1))
        sg = apply_move(sg, move)
    return sg


@settings(max_examples=40, deadline=None)
@given(random_chains())
def test_forward_moves_reduce_back(sg):
    assert check_admissible(sg).admissible
    chain = build_chain(sg)
    assert replay(chain).graph == sg.graph
    assert all(check_admissible(h).admissible for h in chain.intermediates())
    assert all("search" not in m.lemma for m in chain.moves)
