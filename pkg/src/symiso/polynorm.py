"""Norms with a parallelogram unit ball, framework colours and exact isostaticity.

A norm is stored through two linear functionals: the unit ball is
``{x : max(|phi1(x)|, |phi2(x)|) <= 1}``. Facet class 1 collects the facets
``phi1 = +-1`` and class 2 the facets ``phi2 = +-1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Mapping, Optional, Sequence, Tuple

from . import linalg
from .errors import DegenerateBall, NotWellPositioned
from .symcore import Edge, Graph

Point = Tuple[Fraction, Fraction]
Matrix = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(t, a: Point) -> Point:
    return (t * a[0], t * a[1])


class FacetClass(enum.IntEnum):
    F1 = 1
    F2 = 2

    @property
    def other(self) -> "FacetClass":
        return FacetClass.F2 if self is FacetClass.F1 else FacetClass.F1


@dataclass(frozen=True)
class QuadNorm:
    phi1: Point
    phi2: Point

    def functional(self, k: int) -> Point:
        return self.phi1 if k == 1 else self.phi2

    def evaluate(self, k: int, x: Point) -> Fraction:
        f = self.functional(k)
        return f[0] * x[0] + f[1] * x[1]

    def extreme_point(self, s1=1, s2=1) -> Point:
        """The point where phi1 = s1 and phi2 = s2 (a ball vertex when |s1| = |s2| = 1)."""
        (a, b), (c, d) = self.phi1, self.phi2
        s1, s2 = Fraction(s1), Fraction(s2)
        det = a * d - b * c
        return ((d * s1 - b * s2) / det, (a * s2 - c * s1) / det)

    def facet_point(self, k: int, t=0) -> Point:
        """Point of the facet phi_k = 1 at which the other functional equals ``t``."""
        return self.extreme_point(1, t) if k == 1 else self.extreme_point(t, 1)


def make_quad_norm(phi1, phi2) -> QuadNorm:
    f1 = point(*phi1)
    f2 = point(*phi2)
    if f1[0] * f2[1] - f1[1] * f2[0] == 0:
        raise DegenerateBall("the two functionals are linearly dependent")
    return QuadNorm(f1, f2)


def linf_norm() -> QuadNorm:
    return make_quad_norm((1, 0), (0, 1))


def l1_norm() -> QuadNorm:
    """|x| + |y| = max(|x + y|, |x - y|)."""
    return make_quad_norm((1, 1), (1, -1))


def norm_value(norm: QuadNorm, x: Point) -> Fraction:
    return max(abs(norm.evaluate(1, x)), abs(norm.evaluate(2, x)))


def facet_class(norm: QuadNorm, x: Point) -> Optional[FacetClass]:
    """Colour of direction ``x``; None when x points at a vertex of the ball."""
    a = abs(norm.evaluate(1, x))
    b = abs(norm.evaluate(2, x))
    if a == b:
        if a == 0:
            raise ValueError("the zero vector has no facet class")
        return None
    return FacetClass.F1 if a > b else FacetClass.F2


# --------------------------------------------------------------------------- isometries

class IsometryKind(enum.Enum):
    IDENTITY = "Identity"
    REFLECTION_PRESERVING = "ReflectionPreserving"
    REFLECTION_SWAPPING = "ReflectionSwapping"
    HALF_TURN = "HalfTurn"
    QUARTER_TURN = "QuarterTurn"
    OTHER = "Other"


def mat_vec(m: Matrix, x: Point) -> Point:
    return (m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


IDENTITY_MATRIX = _matrix(((1, 0), (0, 1)))


@dataclass(frozen=True)
class LinearIsometry:
    matrix: Matrix
    kind: IsometryKind
    swaps_facets: bool

    def __call__(self, x: Point) -> Point:
        return mat_vec(self.matrix, x)

    def power(self, k: int) -> Matrix:
        m = IDENTITY_MATRIX
        for _ in range(k):
            m = mat_mul(self.matrix, m)
        return m

    def apply_power(self, x: Point, k: int) -> Point:
        for _ in range(k):
            x = self(x)
        return x

    @property
    def order(self) -> int:
        m = self.matrix
        for k in range(1, 9):
            if m == IDENTITY_MATRIX:
                return k
            m = mat_mul(self.matrix, m)
        raise ValueError("isometry of infinite order")

    def image_class(self, c: FacetClass) -> FacetClass:
        return c.other if self.swaps_facets else c

    def fixes(self, x: Point) -> bool:
        return self(x) == x

    def describe(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"{self.kind.value} [[{a}, {b}], [{c}, {d}]]"


def _pullback(norm: QuadNorm, k: int, m: Matrix) -> Point:
    f = norm.functional(k)
    return (f[0] * m[0][0] + f[1] * m[1][0], f[0] * m[0][1] + f[1] * m[1][1])


def classify_isometry(norm: QuadNorm, m: Matrix) -> LinearIsometry:
    m = _matrix(m)
    f1, f2 = norm.phi1, norm.phi2
    g1 = _pullback(norm, 1, m)
    neg = lambda p: (-p[0], -p[1])
    if g1 in (f1, neg(f1)):
        swaps = False
    elif g1 in (f2, neg(f2)):
        swaps = True
    else:
        raise ValueError("matrix does not map the unit ball onto itself")
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    square = mat_mul(m, m)
    if m == IDENTITY_MATRIX:
        kind = IsometryKind.IDENTITY
    elif m == _matrix(((-1, 0), (0, -1))):
        kind = IsometryKind.HALF_TURN
    elif det == -1 and square == IDENTITY_MATRIX:
        kind = IsometryKind.REFLECTION_SWAPPING if swaps else IsometryKind.REFLECTION_PRESERVING
    elif m in (_matrix(((0, -1), (1, 0))), _matrix(((0, 1), (-1, 0)))):
        kind = IsometryKind.QUARTER_TURN
    else:
        kind = IsometryKind.OTHER
    return LinearIsometry(m, kind, swaps)


def isometries(norm: QuadNorm) -> List[LinearIsometry]:
    """All linear maps permuting the four vertices of the unit ball."""
    ya = norm.extreme_point(1, 1)
    yb = norm.extreme_point(1, -1)
    ext = [ya, yb, scale(-1, ya), scale(-1, yb)]
    # inverse of the matrix with columns ya, yb
    det = ya[0] * yb[1] - yb[0] * ya[1]
    inv = ((yb[1] / det, -yb[0] / det), (-ya[1] / det, ya[0] / det))
    out = []
    for ia in ext:
        for ib in ext:
            if ib in (ia, scale(-1, ia)):
                continue
            cols = ((ia[0], ib[0]), (ia[1], ib[1]))
            out.append(classify_isometry(norm, mat_mul(cols, inv)))
    out.sort(key=lambda iso: (list(IsometryKind).index(iso.kind), iso.matrix))
    return out


def isometries_of_kind(norm: QuadNorm, kind: IsometryKind) -> List[LinearIsometry]:
    return [iso for iso in isometries(norm) if iso.kind is kind]


# --------------------------------------------------------------------------- placements

@dataclass(frozen=True)
class Placement:
    coords: Mapping[int, Point]

    def __post_init__(self):
        pts = list(self.coords.values())
        if len(set(pts)) != len(pts):
            raise ValueError("placement points must be distinct")

    def __getitem__(self, v: int) -> Point:
        return self.coords[v]

    @classmethod
    def of(cls, coords: Mapping[int, Sequence]) -> "Placement":
        return cls({v: point(*xy) for v, xy in coords.items()})


@dataclass(frozen=True)
class Coloring:
    colors: Mapping[Edge, FacetClass]

    def monochrome(self, c: FacetClass) -> FrozenSet[Edge]:
        return frozenset(e for e, k in self.colors.items() if k is c)


def edge_vector(p: Placement, e: Edge) -> Point:
    return sub(p[e[0]], p[e[1]])


def try_coloring(graph: Graph, p: Placement, norm: QuadNorm) -> Tuple[Optional[Coloring], Optional[Edge]]:
    colors = {}
    for e in graph.sorted_edges():
        c = facet_class(norm, edge_vector(p, e))
        if c is None:
            return None, e
        colors[e] = c
    return Coloring(colors), None


def coloring(graph: Graph, p: Placement, norm: QuadNorm) -> Coloring:
    """Framework colour of every edge; raises NotWellPositioned on the first bad edge."""
    col, bad = try_coloring(graph, p, norm)
    if col is None:
        raise NotWellPositioned(f"edge {bad} points at a vertex of the unit ball", bad)
    return col


def rigidity_matrix(graph: Graph, p: Placement, norm: QuadNorm) -> List[List[Fraction]]:
    """Differential of the edge-length map at a well-positioned placement."""
    col = coloring(graph, p, norm)
    index = {v: i for i, v in enumerate(graph.vertices)}
    rows = []
    for e in graph.sorted_edges():
        u, w = e
        k = int(col.colors[e])
        f = norm.functional(k)
        sigma = 1 if norm.evaluate(k, edge_vector(p, e)) > 0 else -1
        row = [Fraction(0)] * (2 * graph.n)
        row[2 * index[u]] = sigma * f[0]
        row[2 * index[u] + 1] = sigma * f[1]
        row[2 * index[w]] = -sigma * f[0]
        row[2 * index[w] + 1] = -sigma * f[1]
        rows.append(row)
    return rows


def _spanning_tree_by_union_find(vertices, edges) -> bool:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if len(edges) != len(parent) - 1:
        return False
    for u, w in edges:
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        parent[ru] = rw
    return True


@dataclass(frozen=True)
class IsostaticReport:
    isostatic: bool
    rank: int
    kernel_dimension: int
    edge_count_ok: bool
    monochrome_trees: bool
    coloring: Coloring

    @property
    def criteria_agree(self) -> bool:
        return self.isostatic == self.monochrome_trees

    def summary(self) -> str:
        return (f"isostatic={self.isostatic} rank={self.rank} kernel_dim={self.kernel_dimension} "
                f"edge_count_ok={self.edge_count_ok} monochrome_trees={self.monochrome_trees}")


def is_isostatic(graph: Graph, p: Placement, norm: QuadNorm) -> IsostaticReport:
    """Rank test (|E| = 2|V| - 2 = rank) together with the monochrome spanning tree test."""
    col = coloring(graph, p, norm)
    n, m = graph.n, graph.m
    r = linalg.rank(rigidity_matrix(graph, p, norm)) if m else 0
    kernel = 2 * n - r
    count_ok = m == 2 * n - 2
    iso = count_ok and r == 2 * n - 2
    trees = (_spanning_tree_by_union_find(graph.vertices, col.monochrome(FacetClass.F1))
             and _spanning_tree_by_union_find(graph.vertices, col.monochrome(FacetClass.F2)))
    return IsostaticReport(iso, r, kernel, count_ok, trees, col)
