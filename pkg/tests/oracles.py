"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from inertial.graph import Graph, graph_from_edges


def bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly_at(m: list[list[int]], x: int) -> int:
    n = len(m)
    return bareiss_det([[(x if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)])


def char_poly_by_interpolation(m: list[list[int]]) -> list[int]:
    """Coefficients (low to high) of det(xI - m) from n+1 determinant evaluations."""
    n = len(m)
    xs = list(range(n + 1))
    ys = [char_poly_at(m, x) for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n + 1):
            coeffs[k] += ys[i] * basis[k] / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.rows[v] & mask) for v in range(g.order) if mask >> v & 1)


def alpha_brute(g: Graph) -> int:
    return max(bin(mask).count("1") for mask in range(1 << g.order) if is_independent(g, mask))


def maximal_independent_brute(g: Graph) -> set[int]:
    ind = [mask for mask in range(1 << g.order) if is_independent(g, mask)]
    out = set()
    for mask in ind:
        if all(not is_independent(g, mask | 1 << v) for v in range(g.order) if not mask >> v & 1):
            out.add(mask)
    return out


def chi_subset_dp(g: Graph) -> int:
    """Minimum partition of V into independent sets, by DP over vertex subsets."""
    n = g.order
    full = (1 << n) - 1
    indep = [is_independent(g, m) for m in range(1 << n)]
    best = [0] + [n + 1] * full
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            piece = sub | low
            if indep[piece]:
                best[s] = min(best[s], best[s ^ piece] + 1)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return best[full]


def k_colorable_brute(g: Graph, k: int) -> bool:
    edges = g.edges()
    for colors in product(range(k), repeat=g.order - 1):
        c = (0,) + colors
        if all(c[u] != c[v] for u, v in edges):
            return True
    return False


def chi_brute(g: Graph) -> int:
    k = 1
    while not k_colorable_brute(g, k):
        k += 1
    return k


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return graph_from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def common_neighbour_counts(g: Graph) -> tuple[set[int], set[int], set[int]]:
    degs = {g.degree(v) for v in range(g.order)}
    adj, non = set(), set()
    for u, v in combinations(range(g.order), 2):
        c = (g.rows[u] & g.rows[v]).bit_count()
        (adj if g.has_edge(u, v) else non).add(c)
    return degs, adj, non
