"""Symmetric spanning-tree packings and the combinatorial admissibility test."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .symcore import Edge, GroupCase, SymmetricGraph, edge_orbits, fixed_elements


class TreeMode(enum.Enum):
    INVARIANT = "Invariant"
    SWAPPED = "Swapped"


def mode_for_case(case: GroupCase) -> TreeMode:
    if case in (GroupCase.CS_PRESERVING, GroupCase.C2):
        return TreeMode.INVARIANT
    return TreeMode.SWAPPED


@dataclass(frozen=True)
class TreePair:
    tree1: FrozenSet[Edge]
    tree2: FrozenSet[Edge]
    mode: TreeMode

    def swapped_names(self) -> "TreePair":
        return TreePair(self.tree2, self.tree1, self.mode)

    def tree_of(self, e: Edge) -> int:
        if e in self.tree1:
            return 1
        if e in self.tree2:
            return 2
        raise KeyError(e)


class FailureReason(enum.Enum):
    EDGE_COUNT = "EdgeCount"
    FIXED_EDGE_RULE = "FixedEdgeRule"
    NO_PACKING = "NoPacking"
    INVALID_ACTION = "InvalidAction"


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    tree_pair: Optional[TreePair]
    fixed_edge_count: int
    failure_reason: Optional[FailureReason] = None
    fixed_vertex_count: int = 0

    def summary(self) -> str:
        if self.admissible:
            return "admissible"
        return f"not admissible ({self.failure_reason.value})"


class RollbackDisjointSet:
    """Union-find without path compression so that unions can be undone."""

    def __init__(self, elements):
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in elements}
        self._history: List[Tuple] = []

    def find(self, x):
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        bumped = self.rank[ra] == self.rank[rb]
        self.parent[rb] = ra
        if bumped:
            self.rank[ra] += 1
        self._history.append((rb, ra, bumped))
        return True

    def checkpoint(self) -> int:
        return len(self._history)

    def rollback(self, mark: int) -> None:
        while len(self._history) > mark:
            rb, ra, bumped = self._history.pop()
            self.parent[rb] = rb
            if bumped:
                self.rank[ra] -= 1


def _search_order(orbits: Sequence[Tuple[Edge, ...]]) -> List[Tuple[Edge, ...]]:
    # largest orbit first, ties by smallest edge
    return sorted(orbits, key=lambda orb: (-len(orb), min(orb)))


def _orbit_splits(orbit: Tuple[Edge, ...], mode: TreeMode) -> List[Tuple[Tuple[Edge, ...], Tuple[Edge, ...]]]:
    """Ways of distributing one edge orbit over (tree1, tree2)."""
    if mode is TreeMode.INVARIANT:
        return [(orbit, ()), ((), orbit)]
    if len(orbit) % 2:
        # an odd orbit (in particular a fixed edge) cannot alternate between the trees
        return []
    even, odd = orbit[0::2], orbit[1::2]
    return [(even, odd), (odd, even)]


def iter_tree_pairs(sg: SymmetricGraph, mode: TreeMode) -> Iterator[TreePair]:
    """Lazily enumerate every symmetric packing in ``mode`` (ordered pairs)."""
    g = sg.graph
    n = g.n
    if g.m != 2 * n - 2:
        return
    orbits = _search_order(edge_orbits(sg).edge_orbits)
    options = [_orbit_splits(orb, mode) for orb in orbits]
    if any(not opts for opts in options):
        return
    forests = (RollbackDisjointSet(g.vertices), RollbackDisjointSet(g.vertices))
    chosen: List[List[Edge]] = [[], []]

    def place(edges, t) -> bool:
        if len(chosen[t]) + len(edges) > n - 1:
            return False
        for u, v in edges:
            if not forests[t].union(u, v):
                return False
        chosen[t].extend(edges)
        return True

    def rec(i: int) -> Iterator[TreePair]:
        if i == len(orbits):
            yield TreePair(frozenset(chosen[0]), frozenset(chosen[1]), mode)
            return
        for part1, part2 in options[i]:
            marks = (forests[0].checkpoint(), forests[1].checkpoint())
            sizes = (len(chosen[0]), len(chosen[1]))
            if place(part1, 0) and place(part2, 1):
                yield from rec(i + 1)
            forests[0].rollback(marks[0])
            forests[1].rollback(marks[1])
            del chosen[0][sizes[0]:]
            del chosen[1][sizes[1]:]

    yield from rec(0)


def find_tree_pair(sg: SymmetricGraph, mode: TreeMode) -> Optional[TreePair]:
    """First symmetric packing found by the orbit backtracking, or None."""
    return next(iter_tree_pairs(sg, mode), None)


def _is_spanning_tree(vertices, edges) -> bool:
    vertices = list(vertices)
    if len(edges) != len(vertices) - 1:
        return False
    if not vertices:
        return True
    adj = {v: [] for v in vertices}
    for u, v in edges:
        if u not in adj or v not in adj:
            return False
        adj[u].append(v)
        adj[v].append(u)
    seen = {vertices[0]}
    queue = [vertices[0]]
    while queue:
        u = queue.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def tree_pair_problems(sg: SymmetricGraph, pair: TreePair) -> List[str]:
    """Everything wrong with ``pair`` as a certificate for ``sg`` (empty if valid)."""
    problems = []
    g = sg.graph
    t1, t2 = set(pair.tree1), set(pair.tree2)
    if t1 & t2:
        problems.append("trees share edges")
    if t1 | t2 != set(g.edges):
        problems.append("trees do not cover exactly the edge set")
    if not _is_spanning_tree(g.vertices, t1):
        problems.append("tree1 is not a spanning tree")
    if not _is_spanning_tree(g.vertices, t2):
        problems.append("tree2 is not a spanning tree")
    for e in t1 | t2:
        if e not in g.edges:
            continue
        ge = sg.act_edge(e)
        if pair.mode is TreeMode.INVARIANT:
            ok = (e in t1) == (ge in t1)
        else:
            ok = (e in t1) == (ge in t2)
        if not ok:
            problems.append(f"{pair.mode.value} symmetry law fails at edge {e}")
            break
    return problems


def is_valid_tree_pair(sg: SymmetricGraph, pair: TreePair) -> bool:
    return not tree_pair_problems(sg, pair)


def fixed_edge_count(sg: SymmetricGraph) -> int:
    power = 2 if sg.case is GroupCase.C4 else 1
    return len(fixed_elements(sg, power)[1])


def fixed_edge_rule(case: GroupCase, count: int) -> bool:
    if case in (GroupCase.CS_PRESERVING, GroupCase.CS_SWAPPING):
        return count == 0
    return count in (0, 2)


def check_admissible(sg: SymmetricGraph) -> AdmissibilityReport:
    """Decide the combinatorial condition for the symmetric case of ``sg``."""
    g = sg.graph
    count = fixed_edge_count(sg)
    nfixed = len(fixed_elements(sg, 1)[0])
    if g.m != 2 * g.n - 2:
        return AdmissibilityReport(False, None, count, FailureReason.EDGE_COUNT, nfixed)
    if not fixed_edge_rule(sg.case, count):
        return AdmissibilityReport(False, None, count, FailureReason.FIXED_EDGE_RULE, nfixed)
    pair = find_tree_pair(sg, mode_for_case(sg.case))
    if pair is None:
        return AdmissibilityReport(False, None, count, FailureReason.NO_PACKING, nfixed)
    return AdmissibilityReport(True, pair, count, None, nfixed)
