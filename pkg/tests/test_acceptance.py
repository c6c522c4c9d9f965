"""Acceptance criteria, one test per criterion.

Each test gathers every sub-check before asserting and prints a single
PASS/FAIL line (visible even under output capture).  Tolerances and
runtime limits are the stated ones; nothing here is loosened.
"""
import math
import os
import random
import time
from fractions import Fraction
from itertools import combinations

from inertial.bounds import hoffman_bound, hoffman_full_chi, inertial_bound
from inertial.chromatic import chromatic_number, fractional_chromatic, independence_number
from inertial.graph import (
    complement,
    disjoint_union,
    encode_graph6,
    gen_barbell,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_generalized_petersen,
    gen_kneser,
    graph_from_edges,
    parse_graph6,
)
from inertial.harness import check_corollary3, enumerate_labeled_graphs, run_corpus
from inertial.inertia import Spectrum, inertia, numeric_spectrum
from inertial.srg import (
    SrgParams,
    conjecture2_bound,
    srg_complement_params,
    srg_inertia,
    srg_multiplicities,
)

from oracles import chi_brute, random_graph

JOBS = max(1, min(4, os.cpu_count() or 1))


class Checks:
    def __init__(self):
        self.failures: list[str] = []

    def expect(self, label, got, want):
        if got != want:
            self.failures.append(f"{label}: got {got}, expected {want}")

    def true(self, label, ok, detail=""):
        if not ok:
            self.failures.append(f"{label}{': ' + detail if detail else ''}")

    def timed(self, label, limit, fn):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        if dt >= limit:
            self.failures.append(f"{label}: took {dt:.2f}s, limit {limit}s")
        return out

    def finish(self, capsys, number, title, t0):
        dt = time.perf_counter() - t0
        status = "PASS" if not self.failures else "FAIL"
        with capsys.disabled():
            print(f"\n[acceptance {number}] {status} {title} ({dt:.1f}s)")
            for f in self.failures:
                print(f"    - {f}")
        assert not self.failures, "; ".join(self.failures)


def test_criterion_1_exact_inertia(capsys):
    t0, c = time.perf_counter(), Checks()
    fixtures = [
        ("C5", gen_cycle(5), (3, 0, 2)),
        ("Kneser(5,2)", gen_kneser(5, 2), (6, 0, 4)),
        ("Kneser(7,3)", gen_kneser(7, 3), (20, 0, 15)),
        *[(f"Barbell({n})", gen_barbell(n), (2, 0, 2 * n - 2)) for n in (3, 4, 5)],
    ]
    for label, g, want in fixtures:
        c.expect(label, tuple(c.timed(label, 1.0, lambda: inertia(g))), want)
    i = c.timed("K1,2,3", 1.0, lambda: inertia(gen_complete_multipartite([1, 2, 3])))
    c.expect("K1,2,3 (n+, n-)", (i.n_plus, i.n_minus), (1, 2))
    i = c.timed("K3,3", 1.0, lambda: inertia(gen_complete_multipartite([3, 3])))
    c.expect("K3,3 (n+, n-)", (i.n_plus, i.n_minus), (1, 1))
    c.finish(capsys, 1, "exact inertia fixtures", t0)


def test_criterion_2_bounds(capsys):
    t0, c = time.perf_counter(), Checks()
    c.expect("inertial_bound(Petersen)", inertial_bound(inertia(gen_kneser(5, 2))), Fraction(5, 2))
    h = hoffman_bound(numeric_spectrum(gen_cycle(5)))
    c.true("hoffman_bound(C5) ~ sqrt5", abs(h - math.sqrt(5)) <= 1e-6, repr(h))
    s = Spectrum.from_values([56] + [4] * 7 + [0] * 35 + [-4] * 21)
    c.true("Alon-Seymour Hoffman", abs(hoffman_bound(s) - 15) <= 1e-9, repr(hoffman_bound(s)))
    c.expect("Alon-Seymour full Hoffman", hoffman_full_chi(s), 15)
    c.expect("Alon-Seymour inertial bound", inertial_bound(s.inertia()), Fraction(29, 8))
    c.true("runtime < 1 s", time.perf_counter() - t0 < 1.0)
    c.finish(capsys, 2, "bound fixtures", t0)


def test_criterion_3_exact_chif(capsys):
    t0, c = time.perf_counter(), Checks()
    fixtures = [
        ("C5", gen_cycle(5), Fraction(5, 2)),
        ("C7", gen_cycle(7), Fraction(7, 3)),
        ("C9", gen_cycle(9), Fraction(9, 4)),
        ("Kneser(5,2)", gen_kneser(5, 2), Fraction(5, 2)),
        ("Kneser(7,3)", gen_kneser(7, 3), Fraction(7, 3)),
    ]
    for label, g, want in fixtures:
        got = c.timed(label, 30.0, lambda: fractional_chromatic(g, max_order=g.order))
        c.true(label, isinstance(got, Fraction) and got == want, f"got {got!r}, expected {want}")
    c.finish(capsys, 3, "exact fractional chromatic numbers", t0)


def test_criterion_4_exhaustive(capsys):
    t0, c = time.perf_counter(), Checks()
    claims = ["THEOREM1", "COROLLARY1", "THEOREM3", "CONJECTURE1", "CONJECTURE2"]
    report = run_corpus("exhaustive:1..6", claims, jobs=JOBS)
    c.expect("graph count", len(report.outcomes), sum(2 ** (n * (n - 1) // 2) for n in range(1, 7)))
    for claim in claims:
        c.expect(f"{claim} violations", report.summary[claim]["VIOLATED"], 0)
    budget_skips = sum(1 for o in report.outcomes for v in o.verdicts.values() if v.reason == "budget")
    c.expect("budget skips", budget_skips, 0)
    c.true("runtime < 10 min", time.perf_counter() - t0 < 600)
    c.finish(capsys, 4, "exhaustive verification n <= 6", t0)


def test_criterion_5_nordhaus_gaddum(capsys):
    t0, c = time.perf_counter(), Checks()
    g = gen_generalized_petersen(15, 4)
    total = c.timed("GP(15,4)", 30.0, lambda: inertia(g).n_minus + inertia(complement(g)).n_minus)
    c.expect("n-(G) + n-(co-G) for GP(15,4)", total, 37)
    c.finish(capsys, 5, "Nordhaus-Gaddum fixture", t0)


def _clebsch():
    # folded 5-cube: 4-bit words, adjacent at Hamming distance 1 or 4
    return graph_from_edges(16, [(u, v) for u, v in combinations(range(16), 2)
                                 if bin(u ^ v).count("1") in (1, 4)], name="Clebsch")


def test_criterion_6_srg(capsys):
    t0, c = time.perf_counter(), Checks()
    pet, cle = SrgParams(10, 3, 0, 1), SrgParams(16, 5, 0, 2)
    c.expect("multiplicities SRG(10,3,0,1)", srg_multiplicities(pet), (5, 4))
    c.expect("multiplicities SRG(16,5,0,2)", srg_multiplicities(cle), (10, 5))
    for p in (pet, cle, SrgParams(5, 2, 0, 1), SrgParams(27, 10, 1, 5)):
        c.expect(f"complement involution {p}", srg_complement_params(srg_complement_params(p)), p)
    petersen = gen_kneser(5, 2)
    by_formula = (srg_inertia(pet), srg_inertia(srg_complement_params(pet)))
    by_exact = (inertia(petersen), inertia(complement(petersen)))
    c.expect("Petersen inertia formula vs exact", by_formula, by_exact)
    for label, (a, b) in (("formula", by_formula), ("exact", by_exact)):
        c.expect(f"n+ sum ({label})", a.n_plus + b.n_plus, 11)
        c.expect(f"n- sum ({label})", a.n_minus + b.n_minus, 9)
    c.expect("conjecture2_bound(10) = n+(Petersen)", (conjecture2_bound(10), inertia(petersen).n_plus), (6, 6))
    c.expect("conjecture2_bound(16) = n+(Clebsch)", (conjecture2_bound(16), inertia(_clebsch()).n_plus), (11, 11))
    c5 = gen_cycle(5)
    c.expect("conjecture2_bound(10) = n+(2C5)", inertia(disjoint_union(c5, c5)).n_plus, 6)
    c.finish(capsys, 6, "strongly regular graph algebra", t0)


def test_criterion_7_property_suites(capsys):
    t0, c = time.perf_counter(), Checks()
    rng = random.Random(2024)

    bad = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10))
        perm = list(range(g.order))
        rng.shuffle(perm)
        bad += inertia(g.relabel(perm)) != inertia(g)
    c.expect("permutation invariance mismatches (200)", bad, 0)

    bad = 0
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 12))
        bad += numeric_spectrum(g, tol=1e-9).inertia() != inertia(g)
    c.expect("Descartes vs numeric mismatches (500)", bad, 0)

    bad = 0
    for n in range(1, 7):
        for g in enumerate_labeled_graphs(n):
            chif = fractional_chromatic(g)
            if not Fraction(n, independence_number(g)) <= chif <= chromatic_number(g):
                bad += 1
    c.expect("n/alpha <= chi_f <= chi failures", bad, 0)

    pairs = list(combinations(range(7), 2))
    bad = 0
    for mask in rng.sample(range(2 ** len(pairs)), 1000):
        g = graph_from_edges(7, [e for b, e in enumerate(pairs) if mask >> b & 1])
        bad += chromatic_number(g) != chi_brute(g)
    c.expect("chi vs brute force mismatches (1000, n=7)", bad, 0)

    bad = 0
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            bad += check_corollary3(g, trials=100, seed=0).status.value == "VIOLATED"
    c.expect("weighted inertial bound violations (n <= 5, 100 trials)", bad, 0)
    c.finish(capsys, 7, "property suites", t0)


def test_criterion_8_graph6(capsys):
    t0, c = time.perf_counter(), Checks()
    bad = 0
    for n in range(1, 7):
        for g in enumerate_labeled_graphs(n):
            bad += parse_graph6(encode_graph6(g)) != g
    c.expect("encode/parse round-trip failures", bad, 0)
    c.expect("encode(K4)", encode_graph6(gen_complete(4)), "C~")
    c.expect("parse('C~')", parse_graph6("C~"), gen_complete(4))
    c.finish(capsys, 8, "graph6 codec", t0)
