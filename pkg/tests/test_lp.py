import random
from fractions import Fraction

import pytest
from scipy.optimize import linprog

from inertial.lp import Unbounded, simplex_max


def _random_lp(rng):
    m, n = rng.randint(1, 8), rng.randint(1, 6)
    a = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
    for j in range(n):
        a[rng.randrange(m)][j] = rng.randint(1, 4)
    b = [rng.randint(0, 6) for _ in range(m)]
    c = [rng.randint(-2, 5) for _ in range(n)]
    return a, b, c


def test_against_highs_with_exact_certificates():
    rng = random.Random(99)
    for _ in range(200):
        a, b, c = _random_lp(rng)
        res = simplex_max(a, b, c)
        ref = linprog([-x for x in c], A_ub=a, b_ub=b, method="highs")
        assert float(res.value) == pytest.approx(-ref.fun, abs=1e-9)
        m, n = len(a), len(c)
        assert all(y >= 0 for y in res.primal) and all(u >= 0 for u in res.dual)
        assert all(sum(a[i][j] * res.primal[j] for j in range(n)) <= b[i] for i in range(m))
        assert all(sum(a[i][j] * res.dual[i] for i in range(m)) >= c[j] for j in range(n))
        assert sum(c[j] * res.primal[j] for j in range(n)) == res.value == sum(b[i] * res.dual[i] for i in range(m))


def test_rational_data():
    res = simplex_max([[Fraction(1, 2), 1], [1, Fraction(1, 3)]], [1, 1], [1, 1])
    assert res.value == Fraction(7, 5)
    assert res.dual == [Fraction(4, 5), Fraction(3, 5)]


def test_large_entries_fall_back_to_python_ints():
    res = simplex_max([[2 ** 40, 3], [1, 2 ** 41]], [2 ** 42, 5], [1, 1])
    assert res.primal[0] * 2 ** 40 + 3 * res.primal[1] <= 2 ** 42
    assert res.value == sum(res.primal)
    assert abs(float(res.value) - 4.0) < 1e-9


def test_unbounded_and_bad_rhs():
    with pytest.raises(Unbounded):
        simplex_max([[1, -1]], [1], [0, 1])
    with pytest.raises(ValueError):
        simplex_max([[1]], [-1], [1])


def test_degenerate_cycling_example():
    # Beale's classic cycling LP, rewritten as a maximization; Bland's rule must terminate
    a = [[Fraction(1, 4), -8, -1, 9], [Fraction(1, 2), -12, Fraction(-1, 2), 3], [0, 0, 1, 0]]
    res = simplex_max(a, [0, 0, 1], [Fraction(3, 4), -20, Fraction(1, 2), -6])
    assert res.value == Fraction(5, 4)
