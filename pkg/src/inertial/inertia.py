"""Exact inertia via integer characteristic polynomials, plus a numeric spectrum.

The exact path never touches floating point: the characteristic polynomial is
built with Berkowitz's division-free recurrence over Python ints, and since a
real symmetric matrix has only real eigenvalues, Descartes' rule of signs
counts the positive ones exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

import numpy as np

from .graph import Graph


class PatternViolation(ValueError):
    """A weight matrix is nonzero where the pattern graph has no edge."""


class ConvergenceError(RuntimeError):
    pass


class Inertia(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def order(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def __add__(self, other):  # componentwise, not tuple concatenation
        return Inertia(self.n_plus + other[0], self.n_zero + other[1], self.n_minus + other[2])

    def __str__(self):
        return f"({self.n_plus}, {self.n_zero}, {self.n_minus})"


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, ``coefficients[i]`` multiplies ``x**i``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[-1] != 1:
            raise ValueError("IntPolynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = mono if (mag == 1 and i > 0) else (f"{mag}{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class RationalSymMatrix:
    order: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.order or any(len(r) != self.order for r in self.entries):
            raise ValueError("entries must be an order x order matrix")
        for i in range(self.order):
            if self.entries[i][i] != 0:
                raise PatternViolation(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, self.order):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalSymMatrix":
        return cls(len(rows), tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def from_graph(cls, g: Graph, weights: dict | None = None) -> "RationalSymMatrix":
        """Adjacency of ``g``; ``weights`` maps an edge ``(u, v)`` with u < v to its weight."""
        m = [[Fraction(0)] * g.order for _ in range(g.order)]
        for u, v in g.edges():
            w = Fraction(1) if weights is None else Fraction(weights.get((u, v), 1))
            m[u][v] = m[v][u] = w
        return cls(g.order, tuple(tuple(r) for r in m))

    def scaled_to_integers(self) -> list[list[int]]:
        c = 1
        for row in self.entries:
            for x in row:
                c = lcm(c, x.denominator)
        return [[int(x * c) for x in row] for row in self.entries]


class Spectrum(NamedTuple):
    values: tuple[float, ...]
    tolerance: float

    @classmethod
    def from_values(cls, values, tolerance: float = 1e-9) -> "Spectrum":
        return cls(tuple(sorted((float(v) for v in values), reverse=True)), tolerance)

    def __len__(self):
        return len(self.values)

    def inertia(self) -> "Inertia":
        """Sign counts with |x| <= tolerance treated as zero."""
        pos = sum(1 for x in self.values if x > self.tolerance)
        neg = sum(1 for x in self.values if x < -self.tolerance)
        return Inertia(pos, len(self.values) - pos - neg, neg)


# --- exact path -----------------------------------------------------------


def berkowitz(a: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(xI - a), highest degree first, for an integer matrix."""
    n = len(a)
    poly = [1]
    for r in range(n):
        # Leading (r+1)x(r+1) block: new corner a[r][r], row a[r][:r], column a[:r][r].
        col = [a[i][r] for i in range(r)]
        row_nz = [(j, a[r][j]) for j in range(r) if a[r][j]]
        sub = [[(j, a[i][j]) for j in range(r) if a[i][j]] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(v * vec[j] for j, v in row_nz))
            vec = [sum(v * vec[j] for j, v in sub[i]) for i in range(r)]
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
                for i in range(r + 2)]
    return poly


def char_poly(m: RationalSymMatrix | Graph) -> IntPolynomial:
    """det(xI - cM) with c the lcm of the entry denominators (c = 1 for graphs)."""
    mat = m.adjacency_matrix() if isinstance(m, Graph) else m.scaled_to_integers()
    return IntPolynomial(tuple(reversed(berkowitz(mat))))


def inertia_from_charpoly(p: IntPolynomial) -> Inertia:
    coeffs = p.coefficients
    if not any(coeffs):
        raise ValueError("zero polynomial has no inertia")
    n_zero = next(i for i, c in enumerate(coeffs) if c)
    signs = [c > 0 for c in coeffs[n_zero:] if c]
    n_plus = sum(1 for s, t in zip(signs, signs[1:]) if s != t)
    return Inertia(n_plus, n_zero, p.degree - n_zero - n_plus)


def inertia(g: Graph) -> Inertia:
    return inertia_from_charpoly(char_poly(g))


def inertia_weighted(w: RationalSymMatrix, pattern: Graph) -> Inertia:
    if w.order != pattern.order:
        raise ValueError(f"weight matrix order {w.order} != pattern order {pattern.order}")
    for i in range(w.order):
        for j in range(w.order):
            if w.entries[i][j] != 0 and not pattern.has_edge(i, j):
                raise PatternViolation(f"nonzero weight at non-edge ({i}, {j})")
    return inertia_from_charpoly(char_poly(w))


# --- numeric path ---------------------------------------------------------

MAX_SWEEPS = 100


def jacobi_eigenvalues(a, tol: float = 1e-9, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations (unsorted)."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    scale = max(np.abs(a).sum(axis=1).max(), 1.0)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off < tol * scale:
            return a.diagonal().copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def numeric_spectrum(g: Graph, tol: float = 1e-9) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    vals = jacobi_eigenvalues(g.adjacency_matrix(), tol)
    return Spectrum.from_values(vals, tol)
