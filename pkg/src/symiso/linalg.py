"""Exact rank of rational matrices by fraction-free (Bareiss) elimination."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence


def integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank; all intermediate values stay integers."""
    a = integer_rows(rows)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r
