"""Parameter arithmetic for strongly regular graphs SRG(n, k, lambda, mu).

Everything is exact. Square roots are only taken of perfect squares; the
conference case, where the multiplicity numerator vanishes, is the one
situation allowed to carry an irrational discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .inertia import Inertia


class InfeasibleParameters(ValueError):
    pass


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        n, k, lam, mu = self.n, self.k, self.lam, self.mu
        if n < 2 or k < 1 or lam < 0 or mu < 1:
            raise InfeasibleParameters(f"SRG{self.astuple()}: need n >= 2, k >= 1, lambda >= 0, mu >= 1")
        if k >= n or lam >= k or mu > k:
            raise InfeasibleParameters(f"SRG{self.astuple()}: need k < n, lambda < k, mu <= k")
        num = k * (k - 1 - lam)
        if num % mu or n != 1 + k + num // mu:
            raise InfeasibleParameters(f"SRG{self.astuple()}: violates n = 1 + k + k(k-1-lambda)/mu")
        # raises if multiplicities are not non-negative integers
        srg_multiplicities(self)

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def __str__(self):
        return "SRG({}, {}, {}, {})".format(*self.astuple())


def _discriminant(p) -> int:
    return (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)


def srg_multiplicities(p: SrgParams) -> tuple[int, int]:
    """Multiplicities (f, g) of the eigenvalues r > s."""
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    d = _discriminant(p)
    if d <= 0:
        raise InfeasibleParameters(f"{p}: discriminant {d} must be positive")
    numer = 2 * k + (n - 1) * (lam - mu)
    if numer == 0:
        half = Fraction(n - 1, 2)
        f = g = half
    else:
        root = isqrt(d)
        if root * root != d:
            raise InfeasibleParameters(f"{p}: sqrt({d}) is irrational and the parameters are not of conference type")
        f = Fraction((n - 1) * root - numer, 2 * root)
        g = Fraction((n - 1) * root + numer, 2 * root)
    if f.denominator != 1 or g.denominator != 1 or f < 0 or g < 0:
        raise InfeasibleParameters(f"{p}: multiplicities f={f}, g={g} are not non-negative integers")
    return int(f), int(g)


def srg_complement_params(p: SrgParams) -> SrgParams:
    n, k, lam, mu = p.astuple()
    return SrgParams(n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lam)


def _sign_r(p: SrgParams) -> int:
    # r = ((lam - mu) + sqrt(D)) / 2, compared to 0 without the root
    diff = p.lam - p.mu
    if diff >= 0:
        return 1
    d = _discriminant(p)
    return (d > diff * diff) - (d < diff * diff)


def srg_inertia(p: SrgParams) -> Inertia:
    f, g = srg_multiplicities(p)
    sign = _sign_r(p)
    if sign > 0:
        return Inertia(1 + f, 0, g)
    if sign == 0:
        return Inertia(1, f, g)
    raise InfeasibleParameters(f"{p}: negative eigenvalue r")


def srg_chif_lower(p: SrgParams) -> Fraction:
    """max(n/g, n/(1+f)); lower bound on the fractional chromatic number of a nonsingular SRG."""
    if _sign_r(p) <= 0:
        raise InfeasibleParameters(f"{p}: r = 0, graph is singular")
    f, g = srg_multiplicities(p)
    return max(Fraction(p.n, g), Fraction(p.n, 1 + f))


def mu2one_predicted_nplus(n: int, lam: int, mu: int) -> tuple[Fraction, int]:
    """(n - (n - lam + 2mu)/(2 - lam + mu), 1 - lam + 2mu); assumes second eigenvalue 1."""
    den = 2 - lam + mu
    if den == 0:
        raise ZeroDivisionError("2 - lambda + mu is zero")
    return n - Fraction(n - lam + 2 * mu, den), 1 - lam + 2 * mu


def conjecture2_bound(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return n - (8 * (n - 1)) // (8 + n)


def taylor_params(q: int) -> SrgParams:
    """Taylor-family parameter tuple for odd q >= 3 (parameters only, no graph)."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and >= 3")
    a = (q - 1) * (q * q + 1)
    return SrgParams(q ** 3, a // 2, (q - 1) ** 3 // 4 - 1, a // 4)


def taylor_nplus(q: int) -> int:
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and >= 3")
    return q ** 3 - q ** 2 + q
