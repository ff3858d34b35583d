"""Graphs, cyclic group actions, orbits and symmetric neighbourhoods."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Set, Tuple

from .errors import InvalidGraph, LemmaViolation, NotAutomorphism, PreconditionViolated, WrongOrder

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalised (sorted) form of the unordered pair ``uv``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on integer vertex ids.

    Input graphs use dense ids ``0..n-1``; intermediate graphs produced by
    reductions keep the ids of the graph they came from, so ids may have gaps.
    """

    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    @classmethod
    def from_edges(cls, n_or_vertices, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if isinstance(n_or_vertices, int):
            vertices = tuple(range(n_or_vertices))
        else:
            vertices = tuple(sorted(n_or_vertices))
        if len(set(vertices)) != len(vertices):
            raise InvalidGraph("duplicate vertex id")
        declared = set(vertices)
        seen: Set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            if u not in declared or v not in declared:
                raise InvalidGraph(f"edge {u}-{v} has an undeclared endpoint")
            e = edge(u, v)
            if e in seen:
                raise InvalidGraph(f"duplicate edge {e}")
            seen.add(e)
        return cls(vertices, frozenset(seen))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        adj: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ws) for v, ws in adj.items()}

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def induced(self, vertex_set: Iterable[int]) -> "Graph":
        keep = set(vertex_set)
        return Graph(tuple(sorted(keep)),
                     frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


class GroupCase(enum.Enum):
    """The four symmetry situations covered by the characterisation."""

    CS_PRESERVING = "CsPreserving"
    CS_SWAPPING = "CsSwapping"
    C2 = "C2"
    C4 = "C4"

    @property
    def order(self) -> int:
        return 4 if self is GroupCase.C4 else 2

    @classmethod
    def parse(cls, name: str) -> "GroupCase":
        for case in cls:
            if case.value.lower() == name.lower() or case.name.lower() == name.lower():
                return case
        raise ValueError(f"unknown group case {name!r}")


@dataclass(frozen=True)
class SymmetricGraph:
    """A graph together with a validated cyclic action given by its generator."""

    graph: Graph
    case: GroupCase
    generator: Mapping[int, int]

    @property
    def order(self) -> int:
        return self.case.order

    def act(self, v: int, power: int = 1) -> int:
        for _ in range(power % self.order):
            v = self.generator[v]
        return v

    def act_edge(self, e: Edge, power: int = 1) -> Edge:
        return edge(self.act(e[0], power), self.act(e[1], power))

    def with_graph(self, graph: Graph, generator: Mapping[int, int]) -> "SymmetricGraph":
        return build_symmetric_graph(graph, self.case, generator)

    def is_faithful(self) -> bool:
        """True when the generator has exactly the group order."""
        for k in range(1, self.order):
            if all(self.act(v, k) == v for v in self.graph.vertices):
                return False
        return True


@dataclass(frozen=True)
class OrbitPartition:
    vertex_orbits: Tuple[Tuple[int, ...], ...]
    edge_orbits: Tuple[Tuple[Edge, ...], ...]


def build_symmetric_graph(graph: Graph, case: GroupCase, generator: Mapping[int, int]) -> SymmetricGraph:
    """Validate ``generator`` as an automorphism of order dividing the case's group order."""
    verts = set(graph.vertices)
    if set(generator) != verts:
        raise NotAutomorphism("generator must be defined on exactly the vertex set")
    images = [generator[v] for v in graph.vertices]
    if set(images) != verts:
        raise NotAutomorphism("generator is not a bijection of the vertex set")
    for u, v in graph.edges:
        if edge(generator[u], generator[v]) not in graph.edges:
            raise NotAutomorphism(f"image of edge {u}-{v} is not an edge")
    gen = dict(generator)
    for v in graph.vertices:
        w = v
        for _ in range(case.order):
            w = gen[w]
        if w != v:
            raise WrongOrder(f"generator^{case.order} moves vertex {v}")
    return SymmetricGraph(graph, case, gen)


def fixed_elements(sg: SymmetricGraph, power: int = 1) -> Tuple[FrozenSet[int], FrozenSet[Edge]]:
    """Vertices and edges fixed by ``generator**power``."""
    if not 1 <= power < sg.order:
        raise ValueError(f"power must lie in [1, {sg.order})")
    verts = frozenset(v for v in sg.graph.vertices if sg.act(v, power) == v)
    edges = frozenset(e for e in sg.graph.edges if sg.act_edge(e, power) == e)
    return verts, edges


def _orbit(start, step) -> Tuple:
    out = [start]
    x = step(start)
    while x != start:
        out.append(x)
        x = step(x)
    return tuple(out)


def edge_orbits(sg: SymmetricGraph) -> OrbitPartition:
    """Orbits in generator order, each starting at its smallest member."""
    vorbits = []
    seen: Set = set()
    for v in sorted(sg.graph.vertices):
        if v not in seen:
            orb = _orbit(v, sg.act)
            seen.update(orb)
            vorbits.append(orb)
    eorbits = []
    seen = set()
    for e in sg.graph.sorted_edges():
        if e not in seen:
            orb = _orbit(e, sg.act_edge)
            seen.update(orb)
            eorbits.append(orb)
    return OrbitPartition(tuple(vorbits), tuple(eorbits))


def _require_z2(sg: SymmetricGraph) -> None:
    if sg.order != 2:
        raise PreconditionViolated("symmetric neighbourhoods are defined for Z2 actions only")


def symmetric_neighborhood(sg: SymmetricGraph, v: int) -> Graph:
    """Subgraph induced by N(v), N(sv), v and sv."""
    _require_z2(sg)
    sv = sg.act(v)
    g = sg.graph
    return g.induced(set(g.neighbors(v)) | set(g.neighbors(sv)) | {v, sv})


def neighborhood_intersection(sg: SymmetricGraph, v: int) -> int:
    """Size of N(v) ∩ N(sv) for a 3-valent vertex, with the fixed-vertex check.

    Sizes 1 and 3 are only possible in an admissible pair when the common
    neighbourhood contains the unique fixed vertex; otherwise LemmaViolation.
    """
    _require_z2(sg)
    g = sg.graph
    if g.degree(v) != 3:
        raise PreconditionViolated(f"vertex {v} has degree {g.degree(v)}, expected 3")
    sv = sg.act(v)
    if sv == v:
        raise LemmaViolation(f"3-valent vertex {v} is fixed; fixed vertices of admissible pairs have even degree")
    common = g.neighbors(v) & g.neighbors(sv)
    k = len(common)
    if k in (1, 3) and not any(sg.act(w) == w for w in common):
        raise LemmaViolation(f"N({v}) and N({sv}) meet in {k} vertices, none of them fixed")
    return k


def relabel(sg: SymmetricGraph, mapping: Mapping[int, int]) -> SymmetricGraph:
    """Apply a vertex relabelling and conjugate the action accordingly."""
    g = sg.graph
    graph = Graph.from_edges([mapping[v] for v in g.vertices],
                             [(mapping[u], mapping[v]) for u, v in g.edges])
    gen = {mapping[v]: mapping[sg.generator[v]] for v in g.vertices}
    return build_symmetric_graph(graph, sg.case, gen)
