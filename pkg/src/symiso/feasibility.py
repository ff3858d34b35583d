"""Exact feasibility of strict homogeneous linear systems ``A x > 0``.

Because the system is homogeneous, ``A x > 0`` is solvable iff ``A x >= 1``
is (scale any solution). The primary route is a phase-one simplex over
Fractions with Bland's rule; Fourier-Motzkin elimination is kept as an
independent decision procedure for small systems.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple


def _phase_one(matrix: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    """Find z >= 0 with matrix z = rhs (rhs >= 0), or None."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    # tableau columns: n structural, m artificial, then rhs
    tab = [row[:] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i, row in enumerate(matrix)]
    basis = [n + i for i in range(m)]
    width = n + m
    # reduced costs of "minimise sum of artificials"
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(tab):
            if row[entering] > 0:
                ratio = row[width] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return None  # unbounded cannot happen in phase one; defensive
        r = best[1]
        piv = tab[r][entering]
        tab[r] = [x / piv for x in tab[r]]
        prow = tab[r]
        for i, row in enumerate(tab):
            if i != r and row[entering] != 0:
                f = row[entering]
                tab[i] = [a - f * b for a, b in zip(row, prow)]
        f = cost[entering]
        cost = [a - f * b for a, b in zip(cost, prow)]
        basis[r] = entering
    if cost[width] != 0:
        return None
    z = [Fraction(0)] * width
    for i, j in enumerate(basis):
        z[j] = tab[i][width]
    if any(z[n + i] != 0 for i in range(m)):
        return None
    return z[:n]


def solve_strict(rows: Sequence[Sequence[Fraction]], n_vars: int) -> Optional[List[Fraction]]:
    """A rational x with every row . x >= 1, or None when A x > 0 is infeasible."""
    rows = [[Fraction(a) for a in r] for r in rows]
    if not rows:
        return [Fraction(0)] * n_vars
    if n_vars == 0:
        return None
    # x = xp - xn, surplus s: A xp - A xn - s = 1
    m = len(rows)
    matrix = []
    for i, r in enumerate(rows):
        matrix.append(r + [-a for a in r] + [Fraction(-1) if k == i else Fraction(0) for k in range(m)])
    z = _phase_one(matrix, [Fraction(1)] * m)
    if z is None:
        return None
    x = [z[j] - z[n_vars + j] for j in range(n_vars)]
    assert all(sum(a * b for a, b in zip(r, x)) >= 1 for r in rows)
    return x


def _primitive(row: Sequence[Fraction]) -> Tuple[int, ...]:
    den = 1
    for a in row:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in row]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return tuple(a // g for a in ints) if g else tuple(ints)


def fourier_motzkin_feasible(rows: Sequence[Sequence[Fraction]], n_vars: int) -> bool:
    """Decide ``A x > 0`` by eliminating variables one at a time."""
    cons = {_primitive(r) for r in rows}
    for j in range(n_vars):
        pos = [c for c in cons if c[j] > 0]
        neg = [c for c in cons if c[j] < 0]
        new = {c for c in cons if c[j] == 0}
        for p in pos:
            for q in neg:
                comb = [-q[j] * a + p[j] * b for a, b in zip(p, q)]
                new.add(_primitive(comb))
        cons = new
        if any(all(a == 0 for a in c) for c in cons):
            return False
    return not cons
