"""Spectral lower bounds for the chromatic number.

Bounds take :class:`Inertia` or :class:`Spectrum` values, not graphs, so a
bare spectrum (for a graph nobody wants to build) can be evaluated directly.
"""

from __future__ import annotations

from fractions import Fraction

from .inertia import Inertia, Spectrum


class BoundUndefined(ValueError):
    pass


def inertial_bound(i: Inertia) -> Fraction:
    """1 + max(n+/n-, n-/n+), exact."""
    n_plus, _, n_minus = i
    if n_plus < 1 or n_minus < 1:
        raise BoundUndefined(f"inertial bound needs n+ >= 1 and n- >= 1, got {tuple(i)}")
    return 1 + max(Fraction(n_plus, n_minus), Fraction(n_minus, n_plus))


def inertia_cap_check(i: Inertia, chi: int) -> bool:
    """True iff max(n+, n-) <= n(chi - 1)/chi."""
    if chi < 1:
        raise ValueError("chi must be >= 1")
    n = sum(i)
    return max(i[0], i[2]) <= Fraction(n * (chi - 1), chi)


def hoffman_bound(s: Spectrum) -> float:
    mu1, mun = s.values[0], s.values[-1]
    if mun >= 0:
        raise BoundUndefined("Hoffman bound needs a negative least eigenvalue")
    return 1.0 + mu1 / abs(mun)


def hoffman_full_chi(s: Spectrum, tol: float | None = None) -> int:
    """Smallest c >= 2 with mu_1 plus the c-1 smallest eigenvalues <= tol."""
    vals = s.values
    if tol is None:
        tol = s.tolerance
    if vals[-1] >= 0:
        raise BoundUndefined("full Hoffman bound needs at least one edge")
    n = len(vals)
    total = vals[0]
    for c in range(2, n + 1):
        total += vals[n - c + 1]
        if total <= tol:
            return c
    # unreachable for a trace-zero spectrum; c = n always satisfies the sum
    return n


def chif_nonsingular_bound(i: Inertia) -> Fraction:
    """n / min(n+, n-), a lower bound on the fractional chromatic number when n0 = 0."""
    n_plus, n_zero, n_minus = i
    if n_zero != 0:
        raise BoundUndefined(f"graph is singular (n0 = {n_zero})")
    if n_plus < 1 or n_minus < 1:
        raise BoundUndefined("bound needs n+ >= 1 and n- >= 1")
    return Fraction(n_plus + n_minus, min(n_plus, n_minus))
