"""Symmetric isostatic placements: wheel base, extension steps and a cone solver.

Every function here returns only placements that have been re-checked
exactly: equivariance, well-positionedness, monochrome spanning trees and
full rank of the rigidity matrix.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import construct
from .construct import ExtensionMove, MoveKind
from .errors import (NoSwappingIsometry, NotAdmissible, NotReducible, PlacementSearchFailed,
                     UnsupportedTau)
from .feasibility import solve_strict
from .polynorm import (Coloring, FacetClass, IsometryKind, LinearIsometry, Placement, Point,
                       QuadNorm, add, facet_class, is_isostatic, isometries_of_kind,
                       norm_value, scale, sub, try_coloring)
from .symcore import (Edge, Graph, GroupCase, SymmetricGraph, build_symmetric_graph, edge,
                      edge_orbits, fixed_elements)
from .treepack import (TreeMode, TreePair, check_admissible, iter_tree_pairs, mode_for_case,
                       tree_pair_problems)

log = logging.getLogger(__name__)

HALVING_BUDGET = 64


@dataclass(frozen=True)
class SymmetricPlacement:
    """A verified placement of ``sg`` with ``tau`` representing its generator.

    ``certificate`` is the colouring together with the tree pair it induces
    (tree1 = class F1). ``route`` records how the placement was obtained.
    """

    sg: SymmetricGraph
    placement: Placement
    tau: LinearIsometry
    certificate: Tuple[Coloring, TreePair]
    route: str = ""

    @property
    def coloring(self) -> Coloring:
        return self.certificate[0]

    @property
    def tree_pair(self) -> TreePair:
        return self.certificate[1]


# --------------------------------------------------------------------------- verification

def placement_problems(sg: SymmetricGraph, p: Placement, norm: QuadNorm, tau: LinearIsometry) -> List[str]:
    """Everything wrong with (sg, p) as a symmetric isostatic framework."""
    out = []
    g = sg.graph
    if set(p.coords) != set(g.vertices):
        return ["placement is not defined on exactly the vertex set"]
    for v in g.vertices:
        if tau(p[v]) != p[sg.act(v)]:
            out.append(f"tau p({v}) != p({sg.act(v)})")
    col, bad = try_coloring(g, p, norm)
    if col is None:
        return out + [f"edge {bad} is not well-positioned"]
    report = is_isostatic(g, p, norm)
    if not report.isostatic:
        out.append(f"rank {report.rank} != {2 * g.n - 2} or |E| != 2|V|-2")
    if not report.criteria_agree:
        out.append("rank test and monochrome tree test disagree")
    return out


def _certify(sg: SymmetricGraph, p: Placement, norm: QuadNorm, tau: LinearIsometry,
             route: str) -> SymmetricPlacement:
    problems = placement_problems(sg, p, norm, tau)
    if problems:
        raise PlacementSearchFailed("; ".join(problems))
    col, _ = try_coloring(sg.graph, p, norm)
    pair = TreePair(col.monochrome(FacetClass.F1), col.monochrome(FacetClass.F2),
                    mode_for_case(sg.case))
    return SymmetricPlacement(sg, p, tau, (col, pair), route)


def _monochrome_trees(g: Graph, colors: Dict[Edge, FacetClass]) -> bool:
    for c in FacetClass:
        parent = {v: v for v in g.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        cls = [e for e, k in colors.items() if k is c]
        if len(cls) != g.n - 1:
            return False
        for u, w in cls:
            ru, rw = find(u), find(w)
            if ru == rw:
                return False
            parent[ru] = rw
    return True


# --------------------------------------------------------------------------- geometry helpers

def _intersect(p: Point, d: Point, q: Point, e: Point) -> Optional[Point]:
    """Intersection of the lines p + t d and q + u e, or None when parallel."""
    det = d[0] * (-e[1]) - d[1] * (-e[0])
    if det == 0:
        return None
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = (rx * (-e[1]) - ry * (-e[0])) / det
    return add(p, scale(t, d))


def _grid(a: Point, r: Fraction) -> Iterator[Point]:
    """Rational points of the square of radius r around a, coarse denominators first."""
    seen = set()
    for k in range(1, 5):
        offsets = sorted(itertools.product(range(-k, k + 1), repeat=2), key=lambda ij: (abs(ij[0]) + abs(ij[1]), ij))
        for i, j in offsets:
            q = (a[0] + r * Fraction(i, k), a[1] + r * Fraction(j, k))
            if q not in seen:
                seen.add(q)
                yield q


def _start_radius(norm: QuadNorm, a: Point, pts: Iterable[Point]) -> Fraction:
    pts = list(pts)
    dists = [norm_value(norm, sub(a, q)) for q in pts]
    positive = [d for d in dists if d > 0]
    if len(positive) < len(dists) or not positive:
        # a sits on an existing point: fall back to the spacing of the framework
        spacing = [norm_value(norm, sub(x, y)) for x, y in itertools.combinations(pts, 2)]
        spacing = [d for d in spacing if d > 0] or [Fraction(1)]
        return min(spacing) / 4
    return min(positive) / 2


def _search_ball(norm: QuadNorm, a: Point, pts: Iterable[Point], accept) -> Tuple[Point, int]:
    """r-halving search around ``a``: first grid point that ``accept`` approves."""
    r = _start_radius(norm, a, pts)
    for halvings in range(HALVING_BUDGET + 1):
        for q in _grid(a, r):
            if accept(q):
                return q, halvings
        r /= 2
    raise PlacementSearchFailed(f"no admissible point found near {a} after {HALVING_BUDGET} halvings")


def _witnesses(norm: QuadNorm) -> Tuple[Point, Point, Point]:
    """Facet midpoints x1, x2 and the ball vertex y where phi1 = phi2 = 1."""
    return norm.facet_point(1), norm.facet_point(2), norm.extreme_point(1, 1)


def _region_point(norm: QuadNorm, anchors: Sequence[Tuple[Point, FacetClass]]) -> Iterator[Point]:
    """Points x for which every x - q has the prescribed class, one per sign pattern.

    Homogeneous coordinates (X, Y, W) with W > 0 turn the strict cone
    conditions into a strict homogeneous system.
    """
    for signs in itertools.product((1, -1), repeat=len(anchors)):
        rows = [[Fraction(0), Fraction(0), Fraction(1)]]
        for (q, c), s in zip(anchors, signs):
            fc, fo = norm.functional(int(c)), norm.functional(int(c.other))
            for t in (1, -1):
                a = [s * fc[0] - t * fo[0], s * fc[1] - t * fo[1]]
                rows.append([a[0], a[1], -(a[0] * q[0] + a[1] * q[1])])
        x = solve_strict(rows, 3)
        if x is not None:
            yield (x[0] / x[2], x[1] / x[2])


# --------------------------------------------------------------------------- the wheel

W5_TREE_A = frozenset({edge(2, 3), edge(3, 0), edge(0, 1), edge(1, 4)})
W5_TREE_B = frozenset({edge(1, 2), edge(2, 0), edge(0, 4), edge(4, 3)})


def _w5_graph(kind: IsometryKind) -> SymmetricGraph:
    g = Graph.from_edges(5, construct.W5_EDGES)
    if kind is IsometryKind.QUARTER_TURN:
        return build_symmetric_graph(g, GroupCase.C4, {0: 0, 1: 2, 2: 3, 3: 4, 4: 1})
    case = GroupCase.C2 if kind is IsometryKind.HALF_TURN else GroupCase.CS_PRESERVING
    return build_symmetric_graph(g, case, {0: 0, 1: 3, 3: 1, 2: 4, 4: 2})


def place_w5(norm: QuadNorm, tau: LinearIsometry) -> SymmetricPlacement:
    """Isostatic placement of the wheel symmetric under ``tau``.

    Hub at the origin, v1 at a facet midpoint x, v2 near the meeting point
    of the line through the origin along the other midpoint and the line
    through tau p(v1) along the ball vertex y. The point is then nudged
    inside a shrinking ball until the rim edges v1v2 and v2(sv1) take
    opposite colours.
    """
    if tau.kind is IsometryKind.QUARTER_TURN:
        sg = _w5_graph(tau.kind)
        pair = next(iter_tree_pairs(sg, TreeMode.SWAPPED))
        sp = placement_from_trees(sg, pair, norm, tau)
        if sp is None:
            raise PlacementSearchFailed("no quarter-turn wheel placement found")
        return sp
    if tau.kind not in (IsometryKind.REFLECTION_PRESERVING, IsometryKind.HALF_TURN):
        raise UnsupportedTau(f"the wheel base needs a facet-preserving reflection or the half-turn, got {tau.kind.value}")
    sg = _w5_graph(tau.kind)
    x1, x2, y = _witnesses(norm)
    k1, k2 = FacetClass.F1, FacetClass.F2
    if tau.fixes(x1):
        # x1 spans the mirror; start from the other facet instead
        x1, x2 = x2, x1
        k1, k2 = k2, k1
    origin = (Fraction(0), Fraction(0))
    p1 = x1
    p3 = tau(p1)
    a = _intersect(origin, x2, p3, y)
    if a is None:
        raise PlacementSearchFailed("construction lines are parallel")
    want = {e: k1 for e in W5_TREE_A}
    want.update({e: k2 for e in W5_TREE_B})

    def coords_for(q: Point) -> Dict[int, Point]:
        return {0: origin, 1: p1, 2: q, 3: p3, 4: tau(q)}

    def accept(q: Point) -> bool:
        c = coords_for(q)
        if len(set(c.values())) != 5:
            return False
        for (u, w), k in want.items():
            if facet_class(norm, sub(c[u], c[w])) is not k:
                return False
        return True

    q, _ = _search_ball(norm, a, [origin, p1, p3], accept)
    return _certify(sg, Placement(coords_for(q)), norm, tau, "wheel")


def _w5_relabelling(base: SymmetricGraph) -> Dict[int, int]:
    """Map canonical wheel ids 0..4 onto a wheel copy with hub fixed."""
    g = base.graph
    (hub,) = fixed_elements(base, 1)[0]
    rim = sorted(v for v in g.vertices if v != hub)
    r1 = rim[0]
    r2 = min(w for w in g.neighbors(r1) if w != hub)
    return {0: hub, 1: r1, 2: r2, 3: base.act(r1), 4: base.act(r2)}


def _place_base(base: SymmetricGraph, norm: QuadNorm, tau: LinearIsometry) -> SymmetricPlacement:
    canon = place_w5(norm, tau)
    m = _w5_relabelling(base)
    p = Placement({m[v]: xy for v, xy in canon.placement.coords.items()})
    return _certify(base, p, norm, tau, "wheel")


# --------------------------------------------------------------------------- extensions

def _new_edge_classes(H: SymmetricGraph, pH: SymmetricPlacement, move: ExtensionMove) -> List[Tuple[FacetClass, ...]]:
    """Colours for (v v1, v v2[, v v3]) in order of preference."""
    F1, F2 = FacetClass.F1, FacetClass.F2
    if move.kind is MoveKind.ZERO:
        return [(F1, F2), (F2, F1)]
    c = pH.coloring.colors[move.removed_edge(H)]
    o = c.other
    if move.kind is MoveKind.ONE:
        return [(c, c, o), (c, o, c), (o, c, c)]
    # modified move: v v3 opposite to v v1 first. The second alternative is
    # the mirror image of the first with the roles of v1 and v2 exchanged;
    # it is an interpolation of the sketched second case and is re-verified.
    return [(c, c, o), (o, c, c), (c, o, c)]


def _line_anchor(H: SymmetricGraph, pH: SymmetricPlacement, move: ExtensionMove,
                        classes: Tuple[FacetClass, ...], norm: QuadNorm) -> Optional[Point]:
    p = pH.placement
    x = {FacetClass.F1: norm.facet_point(1), FacetClass.F2: norm.facet_point(2)}
    if move.kind is MoveKind.ZERO:
        v1, v2 = move.anchors
        return _intersect(p[v1], x[classes[0]], p[v2], x[classes[1]])
    if move.kind is MoveKind.ONE and classes[0] == classes[1]:
        v1, v2, v3 = move.anchors
        return _intersect(p[v1], sub(p[v2], p[v1]), p[v3], x[classes[2]])
    return None


def _extend_orbit(H: SymmetricGraph, pH: SymmetricPlacement, move: ExtensionMove,
                  norm: QuadNorm) -> SymmetricPlacement:
    G = construct.apply_move(H, move)
    tau = pH.tau
    p = dict(pH.placement.coords)
    v = move.new[0]
    removed = set()
    e = move.removed_edge(H)
    if e is not None:
        removed = {H.act_edge(e, k) for k in range(H.order)}
    base_colors = {f: c for f, c in pH.coloring.colors.items() if f not in removed}
    existing = list(p.values())

    for classes in _new_edge_classes(H, pH, move):
        # images of the new edges: colour follows tau's facet action
        colors = dict(base_colors)
        for a, c in zip(move.anchors, classes):
            cur_v, cur_a, cur_c = v, a, c
            for _ in range(H.order):
                colors[edge(cur_v, cur_a)] = cur_c
                cur_v, cur_a = G.act(cur_v), G.act(cur_a)
                cur_c = tau.image_class(cur_c)
        if not _monochrome_trees(G.graph, colors):
            continue

        def coords_for(q: Point) -> Dict[int, Point]:
            out = dict(p)
            cur_v, cur_q = v, q
            for _ in range(H.order):
                out[cur_v] = cur_q
                cur_v, cur_q = G.act(cur_v), tau(cur_q)
            return out

        def accept(q: Point) -> bool:
            c = coords_for(q)
            if len(set(c.values())) != len(c):
                return False
            return all(facet_class(norm, sub(q, p[a])) is k for a, k in zip(move.anchors, classes))

        anchors = []
        a = _line_anchor(H, pH, move, classes, norm)
        if a is not None:
            anchors.append(("lines", a))
        anchors.extend(("region", r) for r in _region_point(norm, [(p[w], k) for w, k in zip(move.anchors, classes)]))
        for label, a in anchors:
            try:
                q, _ = _search_ball(norm, a, existing, accept)
            except PlacementSearchFailed:
                continue
            if label != "lines":
                log.debug("extension %s placed from a cone-region point", move.describe())
            return _certify(G, Placement(coords_for(q)), norm, tau, pH.route or "chain")
    raise PlacementSearchFailed(f"could not place {move.describe()}")


def _extend_wheel(H: SymmetricGraph, pH: SymmetricPlacement, move: ExtensionMove,
                  norm: QuadNorm) -> SymmetricPlacement:
    G = construct.apply_move(H, move)
    tau = pH.tau
    (v0,) = move.anchors
    r = move.new
    canon = place_w5(norm, tau)
    centre = pH.placement[v0]
    ids = {0: v0, 1: r[0], 2: r[1], 3: r[2], 4: r[3]}
    pts = list(pH.placement.coords.values())
    spacing = min(norm_value(norm, sub(a, b)) for a, b in itertools.combinations(pts, 2))
    reach = max(norm_value(norm, xy) for xy in canon.placement.coords.values())
    eps = spacing / (4 * reach)
    old = pH.coloring.colors
    for _ in range(HALVING_BUDGET + 1):
        coords = dict(pH.placement.coords)
        for i, w in ids.items():
            coords[w] = add(centre, scale(eps, canon.placement[i]))
        if len(set(coords.values())) == len(coords):
            ok = True
            for w, t in move.attachment:
                if facet_class(norm, sub(coords[w], coords[t])) is not old[edge(w, v0)]:
                    ok = False
                    break
            if ok:
                return _certify(G, Placement(coords), norm, tau, pH.route or "chain")
        eps /= 2
    raise PlacementSearchFailed("contracted wheel never matched the old colours")


def extend_placement(H: SymmetricGraph, pH: SymmetricPlacement, move: ExtensionMove,
                     norm: QuadNorm) -> SymmetricPlacement:
    """Place the graph produced by ``move``, keeping every old point where it was."""
    if move.kind is MoveKind.FIXED_VERTEX_TO_W5:
        return _extend_wheel(H, pH, move, norm)
    return _extend_orbit(H, pH, move, norm)


# --------------------------------------------------------------------------- cone solver

def _fixed_basis(m) -> List[Point]:
    """Basis of {x : m x = x} for a 2x2 rational matrix."""
    a, b = m[0][0] - 1, m[0][1]
    c, d = m[1][0], m[1][1] - 1
    if a == b == c == d == 0:
        return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    if a * d - b * c != 0:
        return []
    return [(-b, a)] if (a, b) != (0, 0) else [(-d, c)]


def _orbit_coordinates(sg: SymmetricGraph, tau: LinearIsometry):
    """Express every p(v) linearly in the free coordinates of orbit representatives."""
    coef: Dict[int, Tuple[List[Fraction], List[Fraction]]] = {}
    blocks = []
    for orbit in edge_orbits(sg).vertex_orbits:
        basis = _fixed_basis(tau.power(len(orbit)))
        blocks.append((orbit, basis))
    n_vars = sum(len(b) for _, b in blocks)
    col = 0
    for orbit, basis in blocks:
        xs =[Fraction(0)] * n_vars
        ys = [Fraction(0)] * n_vars
        for j, (bx, by) in enumerate(basis):
            xs[col + j], ys[col + j] = bx, by
        col += len(basis)
        for v in orbit:
            coef[v] = (xs, ys)
            # next member: apply tau to every column
            xs, ys = ([tau.matrix[0][0] * x + tau.matrix[0][1] * y for x, y in zip(xs, ys)],
                      [tau.matrix[1][0] * x + tau.matrix[1][1] * y for x, y in zip(xs, ys)])
    return coef, n_vars


def _edge_rows(norm: QuadNorm, coef, e: Edge, c: FacetClass, sign: int) -> List[List[Fraction]]:
    (ux, uy), (wx, wy) = coef[e[0]], coef[e[1]]
    dx = [a - b for a, b in zip(ux, wx)]
    dy = [a - b for a, b in zip(uy, wy)]
    fc, fo = norm.functional(int(c)), norm.functional(int(c.other))
    lc = [fc[0] * a + fc[1] * b for a, b in zip(dx, dy)]
    lo = [fo[0] * a + fo[1] * b for a, b in zip(dx, dy)]
    return [[sign * a - b for a, b in zip(lc, lo)], [sign * a + b for a, b in zip(lc, lo)]]


def _evaluate(coef, x: Sequence[Fraction]) -> Dict[int, Point]:
    return {v: (sum(a * b for a, b in zip(xs, x)), sum(a * b for a, b in zip(ys, x)))
            for v, (xs, ys) in coef.items()}


def _integral(coords: Dict[int, Point]) -> Dict[int, Point]:
    den = 1
    for x, y in coords.values():
        den = lcm(den, x.denominator, y.denominator)
    return {v: (x * den, y * den) for v, (x, y) in coords.items()}


def realize_colouring(sg: SymmetricGraph, classes: Dict[Edge, FacetClass], norm: QuadNorm,
                      tau: LinearIsometry, seed: int = 0) -> Optional[Placement]:
    """Distinct tau-equivariant points giving every edge its prescribed class.

    Coordinates of orbit representatives are the unknowns (vertices fixed by
    part of the group are confined to the fixed space of tau's power). Each
    edge orbit contributes sign * phi_c(d) > |phi_other(d)| for its
    representative d; signs are backtracked with exact feasibility pruning.
    No rigidity check is made here.
    """
    coef, n_vars = _orbit_coordinates(sg, tau)
    verts = list(sg.graph.vertices)
    for u, w in itertools.combinations(verts, 2):
        if coef[u] == coef[w]:
            return None
    # colours must respect tau's action on the facets
    for e, c in classes.items():
        if classes[sg.act_edge(e)] is not tau.image_class(c):
            return None
    reps = [orb[0] for orb in edge_orbits(sg).edge_orbits]
    rows: List[List[Fraction]] = []
    solution: List[Optional[List[Fraction]]] = [None]

    def rec(i: int) -> bool:
        if i == len(reps):
            solution[0] = solve_strict(rows, n_vars)
            return solution[0] is not None
        for s in ((1,) if i == 0 else (1, -1)):
            new = _edge_rows(norm, coef, reps[i], classes[reps[i]], s)
            rows.extend(new)
            if solve_strict(rows, n_vars) is not None and rec(i + 1):
                return True
            del rows[-2:]
        return False

    if not rec(0):
        return None
    x = solution[0]
    rng = random.Random(seed)
    for attempt in range(40):
        if attempt == 0:
            z = x
        else:
            delta = [Fraction(rng.randint(-9, 9)) for _ in range(n_vars)]
            spread = max((abs(sum(a * b for a, b in zip(r, delta))) for r in rows), default=Fraction(0))
            eps = Fraction(1, 2) / (spread + 1)
            z = [a + eps * b for a, b in zip(x, delta)]
        coords = _evaluate(coef, z)
        if len(set(coords.values())) == len(coords):
            return Placement(_integral(coords))
    return None


def placement_from_trees(sg: SymmetricGraph, pair: TreePair, norm: QuadNorm, tau: LinearIsometry,
                         seed: int = 0) -> Optional[SymmetricPlacement]:
    """Certified placement whose F1 class is ``pair.tree1`` and F2 class ``pair.tree2``.

    Returns None when the pair is invalid, no sign pattern is feasible or
    the points found fail the exact checks.
    """
    if tree_pair_problems(sg, pair):
        return None
    classes = {e: FacetClass.F1 for e in pair.tree1}
    classes.update({e: FacetClass.F2 for e in pair.tree2})
    p = realize_colouring(sg, classes, norm, tau, seed)
    if p is None or placement_problems(sg, p, norm, tau):
        return None
    return _certify(sg, p, norm, tau, "trees")


# --------------------------------------------------------------------------- synthesis

_TAU_KIND = {
    GroupCase.CS_PRESERVING: IsometryKind.REFLECTION_PRESERVING,
    GroupCase.CS_SWAPPING: IsometryKind.REFLECTION_SWAPPING,
    GroupCase.C2: IsometryKind.HALF_TURN,
    GroupCase.C4: IsometryKind.QUARTER_TURN,
}


def taus_for(case: GroupCase, norm: QuadNorm) -> List[LinearIsometry]:
    """Isometries of the norm that can represent the generator of ``case``."""
    taus = isometries_of_kind(norm, _TAU_KIND[case])
    if not taus:
        raise NoSwappingIsometry(f"the norm has no {_TAU_KIND[case].value} isometry")
    return taus


def place_chain(chain: construct.ConstructionChain, norm: QuadNorm, tau: LinearIsometry) -> SymmetricPlacement:
    sp = _place_base(chain.base, norm, tau)
    g = chain.base
    for move in chain.moves:
        sp = extend_placement(g, sp, move, norm)
        g = sp.sg
    return SymmetricPlacement(sp.sg, sp.placement, sp.tau, sp.certificate, "chain")


def search_placement(sg: SymmetricGraph, norm: QuadNorm, taus: Optional[List[LinearIsometry]] = None,
                     seed: int = 0) -> Optional[SymmetricPlacement]:
    """Try every symmetric tree pair and every admissible tau with the cone solver."""
    taus = taus if taus is not None else taus_for(sg.case, norm)
    mode = mode_for_case(sg.case)
    for pair in iter_tree_pairs(sg, mode):
        for tau in taus:
            sp = placement_from_trees(sg, pair, norm, tau, seed)
            if sp is not None:
                return sp
    return None


def _synthesize_z2_chain(sg: SymmetricGraph, norm: QuadNorm, tau: LinearIsometry) -> SymmetricPlacement:
    chain = construct.build_chain(sg)
    sp = place_chain(chain, norm, tau)
    # the chain reproduces sg exactly; rebind to the caller's object
    return _certify(sg, sp.placement, norm, tau, sp.route)


def synthesize(sg: SymmetricGraph, norm: QuadNorm, seed: int = 0) -> SymmetricPlacement:
    """Symmetric isostatic placement of an admissible instance.

    ``seed`` only affects the perturbation used by the cone solver.
    """
    report = check_admissible(sg)
    if not report.admissible:
        raise NotAdmissible(report.summary())
    taus = taus_for(sg.case, norm)
    if sg.case in (GroupCase.CS_PRESERVING, GroupCase.C2):
        tau = taus[0]
        if sg.case is GroupCase.C2 and report.fixed_edge_count == 2:
            hat, _, w0 = construct.hat_graph(sg, report.tree_pair)
            sp_hat = _synthesize_z2_chain(hat, norm, tau)
            coords = {v: xy for v, xy in sp_hat.placement.coords.items() if v != w0}
            return _certify(sg, Placement(coords), norm, tau, "hat")
        try:
            return _synthesize_z2_chain(sg, norm, tau)
        except (NotReducible, PlacementSearchFailed) as exc:
            log.warning("chain route failed (%s); using the cone solver", exc)
    sp = search_placement(sg, norm, taus, seed)
    if sp is None:
        raise PlacementSearchFailed("no sign pattern of any tree pair is feasible")
    return sp
