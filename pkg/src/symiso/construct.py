"""Allowable Z2 extensions, their inverses, construction chains and the hat graph.

Vertex ids are never renamed: a reduction deletes ids and the matching
extension re-inserts exactly the same ids, so replaying a chain reproduces
the original graph verbatim.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple

from .errors import NotAdmissible, NotReducible, PreconditionViolated
from .symcore import (Edge, Graph, GroupCase, SymmetricGraph, build_symmetric_graph, edge,
                      fixed_elements, neighborhood_intersection)
from .treepack import (TreeMode, TreePair, find_tree_pair, is_valid_tree_pair,
                       tree_pair_problems)

log = logging.getLogger(__name__)


class MoveKind(enum.Enum):
    ZERO = "ZeroExt"
    ONE = "OneExt"
    MODIFIED_ONE = "ModifiedOneExt"
    FIXED_VERTEX_TO_W5 = "FixedVertexToW5"


@dataclass(frozen=True)
class ExtensionMove:
    """One allowable extension H -> G.

    ``anchors`` are vertices of H: (v1, v2) for a 0-extension, (v1, v2, v3)
    for the 1-extensions and (v0,) for the wheel move. ``new`` is the orbit of
    added vertices in generator order, i.e. (v, sv); for the wheel move it is
    the rim (r1, r2, r3, r4) with s(r1) = r3 and s(r2) = r4. For a
    1-extension the removed edge is v1v2, for a modified 1-extension it is
    v1(sv2); its image under s goes too. ``attachment`` lists (w, pi(w)) for
    the wheel move. ``lemma`` records which case of the reduction produced
    the move.
    """

    kind: MoveKind
    anchors: Tuple[int, ...]
    new: Tuple[int, ...]
    attachment: Tuple[Tuple[int, int], ...] = ()
    lemma: str = ""
    experimental: bool = False

    def removed_edge(self, sg: SymmetricGraph) -> Optional[Edge]:
        if self.kind is MoveKind.ONE:
            return edge(self.anchors[0], self.anchors[1])
        if self.kind is MoveKind.MODIFIED_ONE:
            return edge(self.anchors[0], sg.act(self.anchors[1]))
        return None

    def describe(self) -> str:
        names = {MoveKind.ZERO: "0-extension", MoveKind.ONE: "1-extension",
                 MoveKind.MODIFIED_ONE: "modified 1-extension",
                 MoveKind.FIXED_VERTEX_TO_W5: "fixed-vertex-to-W5 extension"}
        text = f"{names[self.kind]} on {list(self.anchors)} adding {list(self.new)}"
        if self.lemma:
            text += f" [{self.lemma}]"
        if self.experimental:
            text += " (experimental)"
        return text


def _orbit_of(sg_gen: Mapping[int, int], start: int) -> List[int]:
    out = [start]
    x = sg_gen[start]
    while x != start:
        out.append(x)
        x = sg_gen[x]
    return out


def _images(gen: Mapping[int, int], order: int, e: Tuple[int, int]) -> Set[Edge]:
    out = set()
    u, v = e
    for _ in range(order):
        out.add(edge(u, v))
        u, v = gen[u], gen[v]
    return out


W5_EDGES = ((1, 2), (2, 3), (3, 4), (1, 4), (0, 1), (0, 2), (0, 3), (0, 4))


def w5_base() -> Tuple[SymmetricGraph, TreePair]:
    """The wheel with hub 0, rim 1-2-3-4 and the involution 1<->3, 2<->4."""
    g = Graph.from_edges(5, W5_EDGES)
    sg = build_symmetric_graph(g, GroupCase.CS_PRESERVING, {0: 0, 1: 3, 3: 1, 2: 4, 4: 2})
    t1 = frozenset({edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 4)})
    t2 = frozenset({edge(1, 2), edge(2, 0), edge(0, 4), edge(4, 3)})
    return sg, TreePair(t1, t2, TreeMode.INVARIANT)


def apply_move(sg: SymmetricGraph, move: ExtensionMove) -> SymmetricGraph:
    """Perform ``move`` on ``sg`` after checking the defining conditions."""
    g = sg.graph
    verts = set(g.vertices)
    order = sg.order

    def fail(clause: str):
        raise PreconditionViolated(f"{move.kind.value}: {clause}")

    if any(v in verts for v in move.new):
        fail("new vertex ids must not occur in H")
    if len(set(move.new)) != len(move.new):
        fail("new vertex ids must be distinct")
    if any(a not in verts for a in move.anchors):
        fail("anchor vertices must belong to H")
    gen = dict(sg.generator)

    if move.kind is MoveKind.FIXED_VERTEX_TO_W5:
        return _apply_w5(sg, move, fail)

    if len(move.new) != order:
        fail(f"the new vertex orbit must have {order} members")
    for i, v in enumerate(move.new):
        gen[v] = move.new[(i + 1) % order]
    v = move.new[0]
    anchors = move.anchors
    if len(set(anchors)) != len(anchors):
        fail("anchor vertices must be distinct")
    edges = set(g.edges)
    if move.kind is MoveKind.ZERO:
        if len(anchors) != 2:
            fail("a 0-extension needs two anchor vertices")
    else:
        if len(anchors) != 3:
            fail("a 1-extension needs three anchor vertices")
        e = move.removed_edge(sg)
        if move.kind is MoveKind.MODIFIED_ONE:
            v1, v2 = anchors[0], anchors[1]
            if len({v1, v2, sg.act(v1), sg.act(v2)}) != 4:
                fail("v1, v2, sv1, sv2 must be distinct")
        if e not in edges:
            fail(f"removed edge {e} is not an edge of H")
        if sg.act_edge(e) == e:
            fail("removed edge must not be fixed by s")
        edges -= _images(sg.generator, order, e)
    for a in anchors:
        new = _images(gen, order, (v, a))
        if new & edges:
            fail("new edges already present")
        edges |= new
    graph = Graph.from_edges(verts | set(move.new), edges)
    return build_symmetric_graph(graph, sg.case, gen)


def _apply_w5(sg: SymmetricGraph, move: ExtensionMove, fail) -> SymmetricGraph:
    if sg.order != 2:
        fail("defined for Z2 actions only")
    g = sg.graph
    (v0,) = move.anchors
    if sg.act(v0) != v0:
        fail("v0 must be fixed by s")
    if len(move.new) != 4:
        fail("the wheel rim has four vertices")
    r1, r2, r3, r4 = move.new
    gen = dict(sg.generator)
    gen.update({r1: r3, r3: r1, r2: r4, r4: r2})
    pi = dict(move.attachment)
    nbrs = set(g.neighbors(v0))
    if set(pi) != nbrs:
        fail("attachment map must be defined on N(v0)")
    wheel = {v0, r1, r2, r3, r4}
    for w, t in pi.items():
        if t not in wheel:
            fail("attachment targets must be wheel vertices")
        if gen[t] != pi[sg.act(w)]:
            fail("attachment map must satisfy s(pi(w)) = pi(sw)")
    edges = {e for e in g.edges if v0 not in e}
    edges |= {edge(w, pi[w]) for w in nbrs}
    edges |= {edge(r1, r2), edge(r2, r3), edge(r3, r4), edge(r4, r1),
              edge(v0, r1), edge(v0, r2), edge(v0, r3), edge(v0, r4)}
    graph = Graph.from_edges(set(g.vertices) | {r1, r2, r3, r4}, edges)
    return build_symmetric_graph(graph, sg.case, gen)


# --------------------------------------------------------------------------- reductions

def _restrict(sg: SymmetricGraph, removed: Set[int], add_edges: Set[Edge]) -> SymmetricGraph:
    g = sg.graph
    verts = [v for v in g.vertices if v not in removed]
    edges = {e for e in g.edges if e[0] not in removed and e[1] not in removed} | add_edges
    gen = {v: sg.generator[v] for v in verts}
    return build_symmetric_graph(Graph.from_edges(verts, edges), sg.case, gen)


def _tree_in(tree: FrozenSet[Edge], removed: Set[int]) -> Set[Edge]:
    return {e for e in tree if e[0] not in removed and e[1] not in removed}


def _component(tree_edges, start, banned) -> Set[int]:
    adj: Dict[int, List[int]] = {}
    for a, b in tree_edges:
        if a in banned or b in banned:
            continue
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class _Candidate:
    """A proposed inverse move: graph H, the forward move and H's trees."""

    removed: Set[int]
    add: Set[Edge]
    move: ExtensionMove
    h1: Set[Edge]
    h2: Set[Edge]
    rename: bool = False  # h1/h2 refer to the swapped tree names of G


def _pair_indices(pair: TreePair, v: int, sg: SymmetricGraph):
    trees = (pair.tree1, pair.tree2)
    counts = [sum(1 for w in sg.graph.neighbors(v) if edge(v, w) in t) for t in trees]
    a = 0 if counts[0] >= counts[1] else 1
    return trees[a], trees[1 - a], a == 1


def _zero_candidate(sg, pair, v) -> _Candidate:
    g = sg.graph
    sv = sg.act(v)
    v1, v2 = sorted(g.neighbors(v))
    removed = {v, sv}
    move = ExtensionMove(MoveKind.ZERO, (v1, v2), (v, sv), lemma="degree 2")
    return _Candidate(removed, set(), move, _tree_in(pair.tree1, removed), _tree_in(pair.tree2, removed))


def _one_ext(sg, v, a, b, c, lemma) -> ExtensionMove:
    return ExtensionMove(MoveKind.ONE, (a, b, c), (v, sg.act(v)), lemma=lemma)


def _mod_ext(sg, v, a, b, c, lemma) -> ExtensionMove:
    return ExtensionMove(MoveKind.MODIFIED_ONE, (a, b, c), (v, sg.act(v)), lemma=lemma)


def _type2_candidate(sg, pair, v) -> Optional[_Candidate]:
    g = sg.graph
    s = sg.act
    sv = s(v)
    t_a, t_b, rename = _pair_indices(pair, v, sg)
    nv = g.neighbors(v)
    common = nv & g.neighbors(sv)
    (v2,) = nv - common
    # relabel v1 <-> sv1 so that vv1 lies in the tree holding two of v's edges
    v1 = next(w for w in sorted(common) if edge(v, w) in t_a)
    removed = {v, sv}
    h1 = _tree_in(t_a, removed)
    h2 = _tree_in(t_b, removed)
    if not g.has_edge(v1, v2):
        e = edge(v1, v2)
        move = _one_ext(sg, v, v1, v2, s(v1), "degree 3, two common neighbours, case 1")
    else:
        e = edge(v1, s(v2))
        # 1-extension on v1, sv1, v2 using the edge se = (sv1)v2
        move = _one_ext(sg, v, s(v1), v2, v1, "degree 3, two common neighbours, case 2")
    add = {e, sg.act_edge(e)}
    return _Candidate(removed, add, move, h1 | add, h2, rename)


def _type0_candidate(sg, pair, v) -> Optional[_Candidate]:
    g = sg.graph
    s = sg.act
    sv = s(v)
    t_a, t_b, rename = _pair_indices(pair, v, sg)
    in_a = sorted(w for w in g.neighbors(v) if edge(v, w) in t_a)
    v1, v2 = in_a
    (v3,) = g.neighbors(v) - {v1, v2}
    removed = {v, sv}
    if not g.has_edge(v1, v2):
        e = edge(v1, v2)
        move = _one_ext(sg, v, v1, v2, v3, "degree 3, disjoint neighbourhoods")
    else:
        e = edge(v1, s(v2))
        move = _mod_ext(sg, v, v1, v2, v3, "degree 3, disjoint neighbourhoods")
    add = {e, sg.act_edge(e)}
    return _Candidate(removed, add, move, _tree_in(t_a, removed) | add, _tree_in(t_b, removed), rename)


def _type1_candidate(sg, pair, v) -> Optional[_Candidate]:
    g = sg.graph
    s = sg.act
    sv = s(v)
    t_a, t_b, rename = _pair_indices(pair, v, sg)
    (v0,) = g.neighbors(v) & g.neighbors(sv)
    v1, v2 = sorted(w for w in g.neighbors(v) if edge(v, w) in t_a)
    (v3,) = g.neighbors(v) - {v1, v2}
    removed = {v, sv}
    h1 = _tree_in(t_a, removed)
    h2 = _tree_in(t_b, removed)
    if not g.has_edge(v1, v2) or v0 == v3:
        if not g.has_edge(v1, v2):
            e = edge(v1, v2)
            move = _one_ext(sg, v, v1, v2, v3, "degree 3, one common neighbour, as disjoint")
        else:
            e = edge(v1, s(v2))
            move = _mod_ext(sg, v, v1, v2, v3, "degree 3, one common neighbour, as disjoint")
        add = {e, sg.act_edge(e)}
        return _Candidate(removed, add, move, h1 | add, h2, rename)
    vj = v2 if v1 == v0 else v1
    comp = _component(t_a, v3, removed)
    g_edge = edge(v0, vj)
    if v0 in comp:
        e, f = edge(vj, v3), edge(s(vj), v3)
        if not g.has_edge(*e):
            add = {e, sg.act_edge(e)}
            return _Candidate(removed, add, _one_ext(sg, v, vj, v3, v0, "degree 3, one common neighbour, case 1"),
                              h1 | add, h2, rename)
        add = {f, sg.act_edge(f)}
        return _Candidate(removed, add, _mod_ext(sg, v, v3, vj, v0, "degree 3, one common neighbour, case 1"),
                          h1 | add, h2, rename)
    e = edge(v0, v3)
    if vj in comp:
        f = edge(s(vj), v3)
        if not g.has_edge(*e):
            add = {e, sg.act_edge(e)}
            return _Candidate(removed, add, _one_ext(sg, v, v0, v3, vj, "degree 3, one common neighbour, case 2"),
                              h1 | add, h2, rename)
        add = {f, sg.act_edge(f)}
        move = _mod_ext(sg, v, v3, vj, v0, "degree 3, one common neighbour, case 2")
    else:
        f = edge(vj, v3)
        if not g.has_edge(*e):
            add = {e, sg.act_edge(e)}
            return _Candidate(removed, add, _one_ext(sg, v, v0, v3, vj, "degree 3, one common neighbour, case 3"),
                              h1 | add, h2, rename)
        add = {f, sg.act_edge(f)}
        move = _one_ext(sg, v, vj, v3, v0, "degree 3, one common neighbour, case 3")
    # recolour g = v0vj and sg from the second tree into the first
    gg = {g_edge, sg.act_edge(g_edge)}
    return _Candidate(removed, add, move, h1 | gg, (h2 - gg) | add, rename)


def _type3_candidate(sg, pair, v) -> Optional[_Candidate]:
    g = sg.graph
    s = sg.act
    sv = s(v)
    common = g.neighbors(v) & g.neighbors(sv)
    v0 = next(w for w in common if s(w) == w)
    trees = (pair.tree1, pair.tree2)
    a = 0 if edge(v, v0) in trees[0] else 1
    t_a, t_b, rename = trees[a], trees[1 - a], a == 1
    v1 = next(w for w in sorted(common - {v0}) if edge(v, w) in t_a)
    removed = {v, sv}
    if not g.has_edge(v0, v1):
        e = edge(v0, v1)
        add = {e, sg.act_edge(e)}
        return _Candidate(removed, add, _one_ext(sg, v, v0, v1, s(v1), "degree 3, three common neighbours"),
                          _tree_in(t_a, removed) | add, _tree_in(t_b, removed), rename)
    wheel = {v0, v, sv, v1, s(v1)}
    outside_hits: Dict[int, int] = {}
    for u in wheel:
        for w in g.neighbors(u):
            if w not in wheel:
                outside_hits[w] = outside_hits.get(w, 0) + 1
    if any(k > 1 for k in outside_hits.values()):
        return None  # non-contractible copy of W5: try another 3-valent vertex
    rim = (v, v1, sv, s(v1))
    attachment = []
    contracted = set()
    for u in wheel:
        for w in g.neighbors(u):
            if w not in wheel:
                attachment.append((w, u))
                contracted.add(edge(w, v0))
    move = ExtensionMove(MoveKind.FIXED_VERTEX_TO_W5, (v0,), rim, tuple(sorted(attachment)),
                         lemma="degree 3, three common neighbours, wheel contraction")

    def contract(tree):
        out = set()
        for x, y in tree:
            if x in wheel and y in wheel:
                continue
            out.add(edge(v0 if x in wheel else x, v0 if y in wheel else y))
        return out

    removed = set(rim)
    add = contracted - {e for e in g.edges if v0 in e}
    return _Candidate(removed, add, move, contract(pair.tree1), contract(pair.tree2))


_TYPE_PREFERENCE = (2, 0, 1, 3)
_TYPE_BUILDERS = {2: _type2_candidate, 0: _type0_candidate, 1: _type1_candidate, 3: _type3_candidate}


def _reduction_targets(sg: SymmetricGraph) -> List[Tuple[int, int]]:
    """(intersection type or -1 for degree 2, vertex) in preference order."""
    g = sg.graph
    deg2 = sorted(v for v in g.vertices if g.degree(v) == 2)
    targets = [(-1, v) for v in deg2]
    deg3 = []
    for v in g.vertices:
        if g.degree(v) == 3:
            k = neighborhood_intersection(sg, v)
            deg3.append((_TYPE_PREFERENCE.index(k), v, k))
    targets += [(k, v) for _, v, k in sorted(deg3)]
    return targets


def _materialise(sg: SymmetricGraph, cand: _Candidate) -> Tuple[SymmetricGraph, TreePair]:
    h = _restrict(sg, cand.removed, cand.add)
    t1, t2 = (cand.h2, cand.h1) if cand.rename else (cand.h1, cand.h2)
    return h, TreePair(frozenset(t1), frozenset(t2), TreeMode.INVARIANT)


def _lemma_reduction(sg: SymmetricGraph, pair: TreePair, target) -> Optional[Tuple]:
    k, v = target
    if k == -1:
        cand = _zero_candidate(sg, pair, v)
    else:
        cand = _TYPE_BUILDERS[k](sg, pair, v)
    if cand is None:
        return None
    h, pair_h = _materialise(sg, cand)
    problems = tree_pair_problems(h, pair_h)
    if problems:
        log.debug("lemma surgery at vertex %s rejected: %s", v, problems)
        return None
    if apply_move(h, cand.move).graph != sg.graph:
        log.debug("lemma move at vertex %s does not replay", v)
        return None
    if fixed_elements(h, 1)[1]:
        return None
    return h, cand.move, pair_h


def _inverse_moves(sg: SymmetricGraph, v: int) -> Iterator[Tuple[Set[int], Set[Edge], ExtensionMove]]:
    """Every inverse 0/1/modified-1 extension that deletes the orbit of ``v``."""
    g = sg.graph
    s = sg.act
    sv = s(v)
    if sv == v:
        return
    removed = {v, sv}
    nv = sorted(g.neighbors(v))
    if len(nv) == 2:
        yield removed, set(), ExtensionMove(MoveKind.ZERO, tuple(nv), (v, sv), lemma="search")
        return
    if len(nv) != 3:
        return
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            a, b = nv[i], nv[j]
            c = nv[3 - i - j]
            if i < j and not g.has_edge(a, b):
                e = edge(a, b)
                if sg.act_edge(e) != e:
                    yield removed, {e, sg.act_edge(e)}, _one_ext(sg, v, a, b, c, "search")
            e = edge(a, s(b))
            if len({a, b, s(a), s(b)}) == 4 and not g.has_edge(*e):
                yield removed, {e, sg.act_edge(e)}, _mod_ext(sg, v, a, b, c, "search")


def _search_reduction(sg: SymmetricGraph, targets) -> Optional[Tuple]:
    for _, v in targets:
        for removed, add, move in _inverse_moves(sg, v):
            if any(w in removed for e in add for w in e):
                continue
            h = _restrict(sg, removed, add)
            if fixed_elements(h, 1)[1]:
                continue
            pair_h = find_tree_pair(h, TreeMode.INVARIANT)
            if pair_h is None:
                continue
            if apply_move(h, move).graph == sg.graph:
                return h, move, pair_h
    return None


def reduce_step(sg: SymmetricGraph, pair: TreePair) -> Tuple[SymmetricGraph, ExtensionMove, TreePair]:
    """One inverse allowable extension following the lemma case analysis.

    The tree surgeries of the lemmas are re-validated; if none of them
    validates (which would indicate a defect), an exhaustive search over
    inverse moves is used and the move is labelled ``search``.
    """
    g = sg.graph
    if sg.order != 2:
        raise PreconditionViolated("reductions are defined for Z2 actions")
    if g.n <= 5:
        raise PreconditionViolated("nothing to reduce on five or fewer vertices")
    if not is_valid_tree_pair(sg, pair) or pair.mode is not TreeMode.INVARIANT:
        raise PreconditionViolated("pair must be a valid invariant tree pair")
    targets = _reduction_targets(sg)
    for target in targets:
        result = _lemma_reduction(sg, pair, target)
        if result is not None:
            return result
    result = _search_reduction(sg, targets)
    if result is not None:
        log.warning("reduction fell back to exhaustive search on %d vertices", g.n)
        return result
    raise NotReducible(f"no allowable reduction found for a graph on {g.n} vertices")


@dataclass(frozen=True)
class ConstructionChain:
    """Moves from a W5 copy (``base``) to the target, with certified trees.

    ``certified_intermediates[k]`` certifies the graph obtained after the
    first k moves; index 0 is the base.
    """

    base: SymmetricGraph
    moves: Tuple[ExtensionMove, ...]
    certified_intermediates: Tuple[TreePair, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def intermediates(self) -> Iterator[SymmetricGraph]:
        g = self.base
        yield g
        for move in self.moves:
            g = apply_move(g, move)
            yield g


def replay(chain: ConstructionChain) -> SymmetricGraph:
    g = chain.base
    for move in chain.moves:
        g = apply_move(g, move)
    return g


def is_w5_with_theta_star(sg: SymmetricGraph) -> bool:
    g = sg.graph
    if g.n != 5 or g.m != 8 or sg.order != 2:
        return False
    fixed_v, fixed_e = fixed_elements(sg, 1)
    if len(fixed_v) != 1 or fixed_e:
        return False
    (hub,) = fixed_v
    return g.degree(hub) == 4 and all(g.degree(v) == 3 for v in g.vertices if v != hub)


def build_chain(sg: SymmetricGraph) -> ConstructionChain:
    """Reduce an admissible pair to W5 and return the forward chain."""
    if sg.order != 2 or fixed_elements(sg, 1)[1]:
        raise NotAdmissible("chains are built for Z2 actions without fixed edges")
    pair = find_tree_pair(sg, TreeMode.INVARIANT)
    if pair is None:
        raise NotAdmissible("no pair of invariant spanning trees")
    moves: List[ExtensionMove] = []
    pairs: List[TreePair] = [pair]
    current = sg
    while current.graph.n > 5:
        current, move, pair = reduce_step(current, pair)
        moves.append(move)
        pairs.append(pair)
    if not is_w5_with_theta_star(current):
        raise NotReducible("reduction did not terminate at W5")
    return ConstructionChain(current, tuple(reversed(moves)), tuple(reversed(pairs)))


# --------------------------------------------------------------------------- hat graph

def hat_graph(sg: SymmetricGraph, pair: TreePair) -> Tuple[SymmetricGraph, TreePair, int]:
    """Replace the two fixed edges of a half-turn graph by a new fixed hub.

    Returns (G_hat, pair_hat, w0). The fixed edge lying in tree1 is removed
    from tree1 and the other from tree2.
    """
    if sg.case is not GroupCase.C2:
        raise PreconditionViolated("the hat graph is defined for half-turn actions")
    fixed = sorted(fixed_elements(sg, 1)[1])
    if len(fixed) != 2:
        raise PreconditionViolated(f"expected exactly two fixed edges, found {len(fixed)}")
    if not is_valid_tree_pair(sg, pair) or pair.mode is not TreeMode.INVARIANT:
        raise PreconditionViolated("pair must be a valid invariant tree pair")
    e, f = fixed
    if e not in pair.tree1:
        e, f = f, e
    if e not in pair.tree1 or f not in pair.tree2:
        raise PreconditionViolated("the fixed edges must lie in different trees")
    g = sg.graph
    w0 = max(g.vertices) + 1
    new_e = {edge(e[0], w0), edge(e[1], w0)}
    new_f = {edge(f[0], w0), edge(f[1], w0)}
    edges = (set(g.edges) - {e, f}) | new_e | new_f
    gen = dict(sg.generator)
    gen[w0] = w0
    hat = build_symmetric_graph(Graph.from_edges(list(g.vertices) + [w0], edges), sg.case, gen)
    hat_pair = TreePair((pair.tree1 - {e}) | new_e, (pair.tree2 - {f}) | new_f, TreeMode.INVARIANT)
    return hat, hat_pair, w0
