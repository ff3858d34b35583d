"""Brute-force oracles, exhaustive enumeration and the equivalence experiment."""
from __future__ import annotations

import itertools
import logging
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, PlacementSearchFailed
from .placement import placement_from_trees, synthesize, taus_for
from .polynorm import FacetClass, LinearIsometry, QuadNorm, facet_class, linf_norm
from .symcore import (Edge, Graph, GroupCase, SymmetricGraph, build_symmetric_graph, edge,
                      edge_orbits, fixed_elements)
from .treepack import (TreeMode, TreePair, check_admissible, fixed_edge_rule, iter_tree_pairs,
                       mode_for_case)

log = logging.getLogger(__name__)

MAX_VERTICES = 11


# --------------------------------------------------------------------------- matroid-union oracle

def _forest_path(forest: set, u: int, w: int) -> Optional[List[Edge]]:
    """Edges of the path from u to w in ``forest``, or None if disconnected."""
    adj: Dict[int, List[int]] = {}
    for a, b in forest:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y in adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if w not in prev:
        return None
    path = []
    while prev[w] is not None:
        path.append(edge(w, prev[w]))
        w = prev[w]
    return path


def _augment(forests: Tuple[set, set], x: Edge) -> bool:
    """Matroid-partition augmentation: fit edge x into one of the two forests."""
    label: Dict[Edge, Optional[Tuple[Edge, int]]] = {x: None}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for i in (0, 1):
            if y in forests[i]:
                continue
            cycle = _forest_path(forests[i], *y)
            if cycle is None:
                # shift every edge one step along the labelled path
                forests[i].add(y)
                while label[y] is not None:
                    prev, j = label[y]
                    forests[j].discard(y)
                    forests[j].add(prev)
                    y = prev
                return True
            for z in cycle:
                if z not in label:
                    label[z] = (y, i)
                    queue.append(z)
    return False


def oracle_tree_decomposition(graph: Graph) -> bool:
    """True iff the edges split into two spanning trees (matroid union of two graphic matroids)."""
    n = graph.n
    if graph.m != 2 * n - 2 or n == 0:
        return False
    if n == 1:
        return True
    forests: Tuple[set, set] = (set(), set())
    for e in graph.sorted_edges():
        if not _augment(forests, e):
            return False
    return len(forests[0]) == n - 1 and len(forests[1]) == n - 1


# --------------------------------------------------------------------------- enumeration

def _orbit_types(case: GroupCase, n: int) -> Iterator[Tuple[int, ...]]:
    """Orbit-size multisets of faithful actions on n points, as sorted tuples."""
    sizes = (1, 2, 4) if case is GroupCase.C4 else (1, 2)
    top = max(sizes)

    def rec(rest, allowed):
        if rest == 0:
            yield ()
            return
        for s in allowed:
            if s <= rest:
                for tail in rec(rest - s, [t for t in allowed if t <= s]):
                    yield (s,) + tail
    for parts in rec(n, sorted(sizes, reverse=True)):
        if top in parts:
            yield tuple(sorted(parts))


def _generator_for(parts: Tuple[int, ...]) -> Dict[int, int]:
    gen = {}
    start = 0
    for s in parts:
        for i in range(s):
            gen[start + i] = start + (i + 1) % s
        start += s
    return gen


def _complete_orbits(n: int, gen: Dict[int, int]) -> List[Tuple[Edge, ...]]:
    seen = set()
    out = []
    for e in itertools.combinations(range(n), 2):
        if e in seen:
            continue
        orb = []
        u, v = e
        while True:
            f = edge(u, v)
            if f in orb:
                break
            orb.append(f)
            u, v = gen[u], gen[v]
        seen.update(orb)
        out.append(tuple(orb))
    return out


def _subsets_with_total(orbits: Sequence[Tuple[Edge, ...]], total: int, fixed_weight: Sequence[int],
                        max_fixed: int) -> Iterator[Tuple[List[Tuple[Edge, ...]], int]]:
    """Orbit subsets with ``total`` edges and at most ``max_fixed`` fixed edges."""
    sizes = [len(o) for o in orbits]
    suffix = [0] * (len(orbits) + 1)
    for i in range(len(orbits) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    chosen: List[Tuple[Edge, ...]] = []

    def rec(i, rest, fixed):
        if rest == 0:
            yield list(chosen), fixed
            return
        if i == len(orbits) or suffix[i] < rest:
            return
        if sizes[i] <= rest and fixed + fixed_weight[i] <= max_fixed:
            chosen.append(orbits[i])
            yield from rec(i + 1, rest - sizes[i], fixed + fixed_weight[i])
            chosen.pop()
        yield from rec(i + 1, rest, fixed)

    yield from rec(0, total, 0)


def _vertex_invariants(sg: SymmetricGraph, orbit_size: Dict[int, int], rounds: int = 3) -> Dict[int, int]:
    """Colour refinement started from (orbit size, degree); isomorphism invariant."""
    g = sg.graph
    colour = {v: (orbit_size[v], g.degree(v)) for v in g.vertices}
    for _ in range(rounds):
        sig = {v: (colour[v], tuple(sorted(colour[w] for w in g.neighbors(v)))) for v in g.vertices}
        index = {t: i for i, t in enumerate(sorted(set(sig.values())))}
        colour = {v: index[sig[v]] for v in g.vertices}
    return colour


def canonical_form(sg: SymmetricGraph) -> Tuple:
    """Minimum relabelled edge list over relabellings that normalise the action.

    Relabellings put orbits in consecutive blocks ordered by (size,
    invariant) with the generator acting as i -> i+1 inside each block
    (or i -> i-1 throughout, which covers the inverse generator). Only
    orbits with equal invariants are permuted among themselves.
    """
    orbits = edge_orbits(sg).vertex_orbits
    size = {v: len(o) for o in orbits for v in o}
    inv = _vertex_invariants(sg, size)
    keyed = sorted(orbits, key=lambda o: (len(o), inv[o[0]]))
    groups = [list(grp) for _, grp in itertools.groupby(keyed, key=lambda o: (len(o), inv[o[0]]))]
    edges = sg.graph.sorted_edges()
    best = None
    directions = (1, -1) if sg.order > 2 else (1,)
    for direction in directions:
        for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
            ordered = [o for perm in perms for o in perm]
            rotations = [range(len(o)) for o in ordered]
            for shifts in itertools.product(*rotations):
                label = {}
                start = 0
                for o, s in zip(ordered, shifts):
                    k = len(o)
                    for i in range(k):
                        label[o[(s + direction * i) % k]] = start + i
                    start += k
                enc = tuple(sorted(edge(label[u], label[v]) for u, v in edges))
                if best is None or enc < best:
                    best = enc
    return (sg.case.value, sg.graph.n, tuple(len(o) for o in keyed), best)


def _min_degree_ok(n: int, edges: Sequence[Edge]) -> bool:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg) >= 2


def _connected(n: int, edges: Sequence[Edge]) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def enumerate_instances(n_max: int, case: GroupCase, n_min: int = 1,
                        fixed_counts: Optional[Iterable[int]] = None,
                        keep: Optional[Callable[[SymmetricGraph], bool]] = None) -> List[SymmetricGraph]:
    """Every (graph, faithful action) class with |E| = 2|V| - 2, connected, min degree >= 2.

    ``fixed_counts`` restricts the number of edges fixed by the generator
    (by its square for C4); ``keep`` is an isomorphism-invariant filter
    applied before canonical labelling.
    """
    if n_max > MAX_VERTICES:
        raise BudgetExceeded(f"enumeration is budgeted to {MAX_VERTICES} vertices")
    allowed = None if fixed_counts is None else set(fixed_counts)
    power = 2 if case is GroupCase.C4 else 1
    out = []
    for n in range(max(n_min, 2), n_max + 1):
        seen = set()
        for parts in _orbit_types(case, n):
            gen = _generator_for(parts)
            orbits = _complete_orbits(n, gen)
            # big orbits first so the subset search prunes early
            orbits.sort(key=len, reverse=True)
            weight = [len(o) if len(o) <= power else 0 for o in orbits]
            cap = max(allowed) if allowed else (0 if allowed is not None else 2 * n)
            for chosen, fixed in _subsets_with_total(orbits, 2 * n - 2, weight, cap):
                if allowed is not None and fixed not in allowed:
                    continue
                edges = [e for o in chosen for e in o]
                if not _min_degree_ok(n, edges) or not _connected(n, edges):
                    continue
                sg = build_symmetric_graph(Graph.from_edges(n, edges), case, gen)
                if keep is not None and not keep(sg):
                    continue
                key = canonical_form(sg)
                if key not in seen:
                    seen.add(key)
                    out.append(sg)
    return out


def enumerate_admissible(n_max: int, case: GroupCase) -> List[SymmetricGraph]:
    """Isomorphism classes of admissible (graph, action) pairs on at most n_max vertices."""
    counts = [c for c in range(0, 3) if fixed_edge_rule(case, c)]
    return enumerate_instances(n_max, case, fixed_counts=counts,
                               keep=lambda sg: check_admissible(sg).admissible)


# --------------------------------------------------------------------------- compatible colourings

def _eigen_direction(m, sign: int):
    """Spanning vector of {x : m x = sign x} when it is a line; 'plane' or None otherwise."""
    a, b = m[0][0] - sign, m[0][1]
    c, d = m[1][0], m[1][1] - sign
    if a == b == c == d == 0:
        return "plane"
    if a * d - b * c != 0:
        return None
    return (-b, a) if (a, b) != (0, 0) else (-d, c)


def forced_edge_classes(sg: SymmetricGraph, norm: QuadNorm, tau: LinearIsometry) -> Optional[Dict[Edge, FacetClass]]:
    """Colours that tau forces on edges fixed by the generator.

    An edge with both ends fixed points along the fixed line of tau; an edge
    whose ends are exchanged points along its reversed line. None when some
    fixed edge cannot be well-positioned at all.
    """
    forced = {}
    for e in fixed_elements(sg, 1)[1]:
        u, w = e
        sign = 1 if sg.act(u) == u else -1
        d = _eigen_direction(tau.matrix, sign)
        if d is None:
            return None
        if d == "plane":
            continue
        c = facet_class(norm, d)
        if c is None:
            return None
        forced[e] = c
    return forced


def compatible_tree_colourings(sg: SymmetricGraph, norm: QuadNorm, tau: LinearIsometry) -> Iterator[TreePair]:
    """Colourings respecting tau's facet action and the forced fixed-edge colours
    whose classes are both spanning trees (tree1 = F1)."""
    forced = forced_edge_classes(sg, norm, tau)
    if forced is None:
        return
    mode = TreeMode.SWAPPED if tau.swaps_facets else TreeMode.INVARIANT
    for pair in iter_tree_pairs(sg, mode):
        if all((e in pair.tree1) == (c is FacetClass.F1) for e, c in forced.items()):
            yield pair


def realizable_colourings(sg: SymmetricGraph, norm: QuadNorm, taus: Optional[List[LinearIsometry]] = None):
    """Yield (tau, pair, placement) for every compatible tree colouring that the cone solver realises."""
    taus = taus if taus is not None else taus_for(sg.case, norm)
    for tau in taus:
        for pair in compatible_tree_colourings(sg, norm, tau):
            sp = placement_from_trees(sg, pair, norm, tau)
            if sp is not None:
                yield tau, pair, sp


# --------------------------------------------------------------------------- experiment

@dataclass
class ExperimentReport:
    case: GroupCase
    n_max: int
    norm: QuadNorm
    instances: int = 0
    agreements: int = 0
    admissible: int = 0
    counterexamples: List[str] = field(default_factory=list)
    seconds: float = 0.0
    seed: int = 0

    def merge(self, other: "ExperimentReport") -> None:
        self.instances += other.instances
        self.agreements += other.agreements
        self.admissible += other.admissible
        self.counterexamples.extend(other.counterexamples)

    def summary(self) -> str:
        lines = [
            f"case {self.case.value} n_max {self.n_max} norm phi1={_fmt(self.norm.phi1)} phi2={_fmt(self.norm.phi2)}",
            f"instances {self.instances}",
            f"admissible {self.admissible}",
            f"agreements {self.agreements}",
            f"counterexamples {len(self.counterexamples)}",
            f"seconds {self.seconds:.2f}",
            f"seed {self.seed}",
        ]
        lines += [f"counterexample {c}" for c in self.counterexamples]
        return "\n".join(lines)


def _fmt(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def describe_instance(sg: SymmetricGraph) -> str:
    action = [sg.generator[v] for v in sg.graph.vertices]
    return f"n={sg.graph.n} edges={sg.graph.sorted_edges()} action={action}"


def _judge(sg: SymmetricGraph, norm: QuadNorm) -> Tuple[bool, Optional[str]]:
    """(admissible, problem) for one instance; problem is None on agreement."""
    report = check_admissible(sg)
    if report.admissible:
        try:
            sp = synthesize(sg, norm)
        except PlacementSearchFailed as exc:
            return True, f"admissible but synthesis failed: {exc}"
        if sp.sg.graph != sg.graph:
            return True, "synthesised placement belongs to another graph"
        return True, None
    found = next(realizable_colourings(sg, norm), None)
    if found is not None:
        tau, pair, _ = found
        return False, f"not admissible ({report.failure_reason.value}) yet realisable with {tau.describe()}"
    # the cone solver over all symmetric tree pairs of the required mode must also fail
    for tau in taus_for(sg.case, norm):
        for pair in iter_tree_pairs(sg, mode_for_case(sg.case)):
            if placement_from_trees(sg, pair, norm, tau) is not None:
                return False, "not admissible yet the cone solver placed a tree pair"
    return False, None


def _run_chunk(args) -> ExperimentReport:
    instances, case, n_max, norm = args
    rep = ExperimentReport(case, n_max, norm)
    for sg in instances:
        adm, problem = _judge(sg, norm)
        rep.instances += 1
        rep.admissible += adm
        if problem is None:
            rep.agreements += 1
        else:
            rep.counterexamples.append(f"{describe_instance(sg)}: {problem}")
    return rep


def equivalence_experiment(n_max: int, case: GroupCase, norm: Optional[QuadNorm] = None,
                           workers: int = 1) -> ExperimentReport:
    """Condition (ii) against existence of a symmetric isostatic placement, instance by instance."""
    norm = norm or linf_norm()
    taus_for(case, norm)  # raises NoSwappingIsometry early
    start = time.perf_counter()
    instances = enumerate_instances(n_max, case)
    report = ExperimentReport(case, n_max, norm)
    if workers <= 1:
        report.merge(_run_chunk((instances, case, n_max, norm)))
    else:
        shards = [instances[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, [(s, case, n_max, norm) for s in shards]):
                report.merge(part)
    report.seconds = time.perf_counter() - start
    return report
