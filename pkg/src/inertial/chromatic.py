"""Exact chromatic number, independence number and fractional chromatic number.

All solvers work on the bitset rows of :class:`Graph` and are meant for
desk-scale graphs (tens of vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, complement
from .lp import simplex_max

DEFAULT_VERTEX_BUDGET = 64
DEFAULT_CHIF_ORDER = 24
DEFAULT_MIS_CAP = 2_000_000


class BudgetExceeded(RuntimeError):
    """Input is beyond the configured desk-scale limit."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_clique(g: Graph) -> list[int]:
    """Clique grown greedily by degree inside the remaining candidate set."""
    rows = g.rows
    best: list[int] = []
    for start in range(g.order):
        clique = [start]
        cand = rows[start]
        while cand:
            v = max(_bits(cand), key=lambda u: ((rows[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= rows[v]
        if len(clique) > len(best):
            best = clique
    return best


def _pick_dsatur(rows, classes, uncolored):
    best_v, best_key = -1, None
    for v in _bits(uncolored):
        rv = rows[v]
        sat = sum(1 for cls in classes if cls & rv)
        key = (sat, (rv & uncolored).bit_count())
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    return best_v


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; ties go to higher uncolored degree, then lower index."""
    rows = g.rows
    classes: list[int] = []
    colors = [-1] * g.order
    uncolored = (1 << g.order) - 1
    while uncolored:
        v = _pick_dsatur(rows, classes, uncolored)
        for c, cls in enumerate(classes):
            if not cls & rows[v]:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
        uncolored &= ~(1 << v)
    return colors


def chromatic_number(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET, lower_bound: int | None = None) -> int:
    """Exact chi by DSATUR branch and bound.

    ``lower_bound`` lets callers pass a known valid bound (for instance the
    ceiling of the inertial bound) to stop the search earlier.
    """
    n = g.order
    if n > vertex_budget:
        raise BudgetExceeded(f"order {n} exceeds vertex budget {vertex_budget}")
    if g.n_edges == 0:
        return 1
    rows = g.rows
    clique = greedy_clique(g)
    lb = max(len(clique), lower_bound or 0)
    best = max(dsatur_coloring(g)) + 1
    if best <= lb:
        return best

    # clique vertices get fixed distinct colors (colour-permutation symmetry)
    classes = [1 << v for v in clique]
    uncolored = ((1 << n) - 1) & ~sum(1 << v for v in clique)

    def search(classes, uncolored):
        nonlocal best
        if not uncolored:
            best = len(classes)
            return best <= lb
        v = _pick_dsatur(rows, classes, uncolored)
        rv = rows[v]
        bit = 1 << v
        rest = uncolored & ~bit
        for c, cls in enumerate(classes):
            if not cls & rv:
                classes[c] = cls | bit
                done = search(classes, rest)
                classes[c] = cls
                if done:
                    return True
        if len(classes) + 1 < best:
            classes.append(bit)
            done = search(classes, rest)
            classes.pop()
            if done:
                return True
        return False

    search(classes, uncolored)
    return best


def _max_clique_size(rows, n: int) -> int:
    best = 0

    def color_order(p):
        order, bounds = [], []
        k = 0
        q = p
        while q:
            k += 1
            avail = q
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~rows[v] & ~low
                q &= ~low
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(size, p):
        nonlocal best
        order, bounds = color_order(p)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            np_ = p & rows[v]
            if np_:
                expand(size + 1, np_)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique_size(g.rows, g.order)


def independence_number(g: Graph, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> int:
    if g.order > vertex_budget:
        raise BudgetExceeded(f"order {g.order} exceeds vertex budget {vertex_budget}")
    return clique_number(complement(g))


@dataclass(frozen=True)
class IndependentSetCollection:
    order: int
    sets: tuple[int, ...]  # bitmasks

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [list(_bits(s)) for s in self.sets]


def maximal_independent_sets(g: Graph, cap: int = DEFAULT_MIS_CAP) -> IndependentSetCollection:
    """All maximal independent sets, via Bron-Kerbosch with pivoting on the complement."""
    n = g.order
    full = (1 << n) - 1
    cadj = [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)]
    found: list[int] = []

    def bk(r, p, x):
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise BudgetExceeded(f"more than {cap} maximal independent sets")
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: (p & cadj[u]).bit_count())
        for v in _bits(p & ~cadj[pivot]):
            bit = 1 << v
            bk(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    bk(0, full, 0)
    return IndependentSetCollection(n, tuple(found))


@dataclass
class FractionalColoring:
    value: Fraction
    weights: dict[int, Fraction]  # independent set bitmask -> weight (covering LP)
    vertex_weights: list[Fraction]  # fractional clique (packing LP) certificate


def fractional_coloring(g: Graph, max_order: int = DEFAULT_CHIF_ORDER, cap: int = DEFAULT_MIS_CAP) -> FractionalColoring:
    """Optimal fractional coloring together with the dual fractional clique.

    Solves max sum(y_v) s.t. sum over S of y_v <= 1 for every maximal independent
    set S; its optimal dual is the covering solution, i.e. the weights x_S.
    """
    if g.order > max_order:
        raise BudgetExceeded(f"order {g.order} exceeds fractional chromatic order limit {max_order}")
    mis = maximal_independent_sets(g, cap)
    a = [[(s >> v) & 1 for v in range(g.order)] for s in mis]
    res = simplex_max(a, [1] * len(a), [1] * g.order)
    weights = {s: w for s, w in zip(mis, res.dual) if w}
    return FractionalColoring(res.value, weights, res.primal)


def fractional_chromatic(g: Graph, max_order: int = DEFAULT_CHIF_ORDER, cap: int = DEFAULT_MIS_CAP) -> Fraction:
    return fractional_coloring(g, max_order, cap).value
