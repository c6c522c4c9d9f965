"""Exact simplex for ``max c.y  s.t.  A y <= b, y >= 0`` with ``b >= 0``.

The dense tableau is an integer matrix over one common denominator (integer
pivoting, as in Bareiss elimination): every entry stays an integer minor of
the input, and no Fraction objects are built inside the pivot loop. Entries
live in an int64 array while a pivot provably cannot overflow, and move to
Python ints (object dtype) for good as soon as that guarantee is lost.

Bland's rule picks both the entering and the leaving variable, which rules
out cycling on the heavily degenerate covering/packing LPs used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

_INT64_SAFE = 1 << 30  # |x|, |y| < 2**30 keeps x*p - y*q inside int64


class Unbounded(ValueError):
    pass


@dataclass
class LPResult:
    value: Fraction
    primal: list[Fraction]  # y
    dual: list[Fraction]  # one multiplier per row of A
    pivots: int


def _integer_rows(a, b, c):
    rows, scales = [], []
    for row, rhs in zip(a, b):
        fr = [Fraction(x) for x in row] + [Fraction(rhs)]
        s = 1
        for x in fr:
            s = lcm(s, x.denominator)
        rows.append([int(x * s) for x in fr])
        scales.append(s)
    fc = [Fraction(x) for x in c]
    sc = 1
    for x in fc:
        sc = lcm(sc, x.denominator)
    return rows, scales, [int(x * sc) for x in fc], sc


def _max_abs(t) -> int:
    return int(np.abs(t).max()) if t.size else 0


def simplex_max(a: Sequence[Sequence], b: Sequence, c: Sequence, max_pivots: int | None = None) -> LPResult:
    m, nv = len(a), len(c)
    if any(Fraction(x) < 0 for x in b):
        raise ValueError("right-hand side must be non-negative (slack basis must be feasible)")
    rows, row_scale, cint, cscale = _integer_rows(a, b, c)
    if any(len(r) != nv + 1 for r in rows):
        raise ValueError("every row of A needs len(c) entries")

    # rows 0..m-1: slack_i + A_i.y = b_i ; row m: z - c.y = 0 ; last column is the rhs
    table = rows + [[-x for x in cint] + [0]]
    t = np.array(table, dtype=object)
    fast = _max_abs(t) < _INT64_SAFE
    if fast:
        t = t.astype(np.int64)
    rhs = nv
    nonbasic = list(range(nv))  # variable ids per column; slack of row i is nv + i
    basic = [nv + i for i in range(m)]
    d = 1
    pivots = 0

    while True:
        obj = t[m, :nv]
        s = -1
        for j in np.flatnonzero(obj < 0):
            if s < 0 or nonbasic[j] < nonbasic[s]:
                s = int(j)
        if s < 0:
            break
        col = t[:m, s]
        r = -1
        for i in np.flatnonzero(col > 0):
            if r < 0:
                r = int(i)
                continue
            lhs = int(t[i, rhs]) * int(col[r])
            cur = int(t[r, rhs]) * int(col[i])
            if lhs < cur or (lhs == cur and basic[i] < basic[r]):
                r = int(i)
        if r < 0:
            raise Unbounded("objective is unbounded")

        if fast and max(_max_abs(t), d) >= _INT64_SAFE:
            t = t.astype(object)
            fast = False
        p = t[r, s]
        prow = t[r].copy()
        pcol = t[:, s].copy()
        num = t * p - np.outer(pcol, prow)
        if np.any(num % d):
            raise ArithmeticError("integer pivot lost exactness")
        t = num // d
        t[r] = prow
        t[:, s] = -pcol
        t[r, s] = d
        d = int(p)
        basic[r], nonbasic[s] = nonbasic[s], basic[r]
        pivots += 1
        if max_pivots is not None and pivots > max_pivots:
            raise RuntimeError(f"simplex exceeded {max_pivots} pivots")

    value = Fraction(int(t[m, rhs]), d * cscale)
    primal = [Fraction(0)] * nv
    for i, var in enumerate(basic):
        if var < nv:
            primal[var] = Fraction(int(t[i, rhs]), d)
    dual = [Fraction(0)] * m
    for j, var in enumerate(nonbasic):
        if var >= nv:
            i = var - nv
            dual[i] = Fraction(int(t[m, j]) * row_scale[i], d * cscale)
    return LPResult(value, primal, dual, pivots)
