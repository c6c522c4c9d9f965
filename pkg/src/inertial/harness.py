"""Corpus-level checks of the inertial bounds and Nordhaus-Gaddum inequalities.

A corpus is a list of graphs (exhaustive labeled graphs, parameterized
families, or a graph6 file). Every graph gets one :class:`CheckOutcome` with a
:class:`Verdict` per requested claim. Violations are collected, never raised.
"""

from __future__ import annotations

import csv
import io
import json
import random
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator

from .bounds import inertia_cap_check, inertial_bound
from .chromatic import (
    DEFAULT_CHIF_ORDER,
    DEFAULT_MIS_CAP,
    DEFAULT_VERTEX_BUDGET,
    BudgetExceeded,
    chromatic_number,
    fractional_chromatic,
)
from .graph import (
    Graph,
    GraphError,
    ParseDiagnostic,
    _upper_pairs,
    complement,
    encode_graph6,
    gen_barbell,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_empty,
    gen_generalized_petersen,
    gen_kneser,
    gen_path,
    read_graph6_file,
)
from .inertia import Inertia, RationalSymMatrix, inertia, inertia_weighted, numeric_spectrum
from .srg import conjecture2_bound

CLAIMS = ("THEOREM1", "COROLLARY1", "CONJECTURE1", "THEOREM3", "CONJECTURE2", "COROLLARY3")
PROVEN = ("THEOREM1", "COROLLARY1", "THEOREM3", "COROLLARY3")
WEIGHT_CHOICES = (-3, -2, -1, 1, 2, 3)


class Status(str, Enum):
    HOLDS = "HOLDS"
    HOLDS_WITH_EQUALITY = "HOLDS_WITH_EQUALITY"
    VIOLATED = "VIOLATED"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str | None = None
    witness: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        return self.status in (Status.HOLDS, Status.HOLDS_WITH_EQUALITY)

    def __str__(self):
        if self.status is Status.SKIPPED:
            return f"SKIPPED({self.reason})"
        return self.status.value


def _holds(equal: bool, **witness) -> Verdict:
    return Verdict(Status.HOLDS_WITH_EQUALITY if equal else Status.HOLDS, witness=witness)


def _skip(reason: str) -> Verdict:
    return Verdict(Status.SKIPPED, reason)


@dataclass
class Budget:
    vertex_budget: int = DEFAULT_VERTEX_BUDGET
    chif_max_order: int = DEFAULT_CHIF_ORDER
    mis_cap: int = DEFAULT_MIS_CAP
    corollary3_trials: int = 10
    seed: int = 0


class GraphFacts:
    """Per-graph cache so several checks share one chi / chi_f / inertia computation."""

    def __init__(self, g: Graph, budget: Budget | None = None):
        self.g = g
        self.budget = budget or Budget()
        self._cache: dict[str, object] = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def inertia(self) -> Inertia:
        return self._get("inertia", lambda: inertia(self.g))

    @property
    def co_inertia(self) -> Inertia:
        return self._get("co_inertia", lambda: inertia(complement(self.g)))

    @property
    def chi(self) -> int:
        # deliberately no spectral lower bound here: the checks must not assume what they test
        return self._get("chi", lambda: chromatic_number(self.g, self.budget.vertex_budget))

    @property
    def chi_f(self) -> Fraction:
        return self._get("chi_f", lambda: fractional_chromatic(self.g, self.budget.chif_max_order, self.budget.mis_cap))

    def cached(self, key):
        return self._cache.get(key)


def _facts(g, facts):
    return facts if facts is not None else GraphFacts(g)


def check_theorem1(g: Graph, facts: GraphFacts | None = None) -> Verdict:
    f = _facts(g, facts)
    if g.n_edges == 0:
        return _skip("edgeless")
    try:
        chi = f.chi
    except BudgetExceeded:
        return _skip("budget")
    bound = inertial_bound(f.inertia)
    if bound > chi:
        return Verdict(Status.VIOLATED, witness={"inertia": tuple(f.inertia), "bound": str(bound), "chi": chi})
    return _holds(bound == chi, bound=str(bound), chi=chi)


def check_corollary1(g: Graph, facts: GraphFacts | None = None) -> Verdict:
    f = _facts(g, facts)
    if g.n_edges == 0:
        return _skip("edgeless")
    try:
        chi = f.chi
    except BudgetExceeded:
        return _skip("budget")
    i = f.inertia
    cap = Fraction(g.order * (chi - 1), chi)
    if not inertia_cap_check(i, chi):
        return Verdict(Status.VIOLATED, witness={"inertia": tuple(i), "chi": chi, "cap": str(cap)})
    return _holds(max(i.n_plus, i.n_minus) == cap, cap=str(cap))


def check_conjecture1(g: Graph, facts: GraphFacts | None = None) -> Verdict:
    f = _facts(g, facts)
    if g.n_edges == 0:
        return _skip("edgeless")
    try:
        chi_f = f.chi_f
    except BudgetExceeded:
        return _skip("budget")
    bound = inertial_bound(f.inertia)
    if bound > chi_f:
        return Verdict(Status.VIOLATED, witness={"inertia": tuple(f.inertia), "bound": str(bound), "chi_f": str(chi_f)})
    return _holds(bound == chi_f, bound=str(bound), chi_f=str(chi_f))


def check_nordhaus_gaddum(g: Graph, facts: GraphFacts | None = None) -> Verdict:
    f = _facts(g, facts)
    n = g.order
    if n < 2:
        # K1 and its complement have no positive eigenvalue; the inequalities presume n >= 2
        return _skip("order<2")
    i, j = f.inertia, f.co_inertia
    sums = {"n_plus": i.n_plus + j.n_plus, "n_zero": i.n_zero + j.n_zero, "n_minus": i.n_minus + j.n_minus}
    ok = 1 <= sums["n_plus"] <= n + 1 and 0 <= sums["n_zero"] <= n and n - 1 <= sums["n_minus"]
    return Verdict(Status.HOLDS if ok else Status.VIOLATED, witness=sums)


check_theorem3 = check_nordhaus_gaddum


def check_conjecture2(g: Graph, facts: GraphFacts | None = None) -> Verdict:
    f = _facts(g, facts)
    cap = conjecture2_bound(g.order)
    n_plus = f.inertia.n_plus
    if n_plus > cap:
        return Verdict(Status.VIOLATED, witness={"n_plus": n_plus, "bound": cap})
    return _holds(n_plus == cap, n_plus=n_plus, bound=cap)


def random_edge_weights(g: Graph, rng: random.Random) -> dict[tuple[int, int], int]:
    return {e: rng.choice(WEIGHT_CHOICES) for e in g.edges()}


def check_corollary3(g: Graph, trials: int = 10, seed: int = 0, facts: GraphFacts | None = None) -> Verdict:
    """Inertial bound of random signed edge weightings of ``g`` against chi(g)."""
    f = _facts(g, facts)
    if g.n_edges == 0:
        return _skip("edgeless")
    try:
        chi = f.chi
    except BudgetExceeded:
        return _skip("budget")
    rng = random.Random(f"{seed}:{encode_graph6(g) if g.order <= 62 else g.name}")
    equal = False
    for t in range(trials):
        weights = random_edge_weights(g, rng)
        wi = inertia_weighted(RationalSymMatrix.from_graph(g, weights), g)
        if wi.n_plus == 0 or wi.n_minus == 0:
            continue
        bound = inertial_bound(wi)
        if bound > chi:
            return Verdict(Status.VIOLATED, witness={
                "trial": t, "weights": {f"{u}-{v}": w for (u, v), w in weights.items()},
                "inertia": tuple(wi), "bound": str(bound), "chi": chi,
            })
        equal = equal or bound == chi
    return _holds(equal, trials=trials)


# --- corpora --------------------------------------------------------------


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2**(n(n-1)/2) labeled graphs on n vertices, by edge-subset counter."""
    if not 1 <= n <= 7:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= 7, got {n}")
    pairs = list(_upper_pairs(n))
    total = 1 << len(pairs)
    width = len(str(total - 1))
    for mask in range(total):
        rows = [0] * n
        m = mask
        k = 0
        while m:
            if m & 1:
                u, v = pairs[k]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            k += 1
        yield Graph(n, tuple(rows), f"n{n}#{mask:0{width}d}")


def _int_range(text: str) -> list[int]:
    out = []
    for part in text.split("|"):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


FAMILIES: dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "complete": (gen_complete, ("n",)),
    "empty": (gen_empty, ("n",)),
    "cycle": (gen_cycle, ("n",)),
    "path": (gen_path, ("n",)),
    "kneser": (gen_kneser, ("p", "k")),
    "gpetersen": (gen_generalized_petersen, ("n", "k")),
    "barbell": (gen_barbell, ("n",)),
    "multipartite": (gen_complete_multipartite, ("parts",)),
}


def family_graphs(spec: str) -> list[Graph]:
    """Graphs for a family spec such as ``kneser:p=5..8,k=2`` or ``multipartite:parts=1/2/3|2/2/2``.

    Several specs may be joined with ``;``. Parameter combinations outside a
    generator's domain are skipped.
    """
    graphs: list[Graph] = []
    for one in filter(None, (s.strip() for s in spec.split(";"))):
        name, _, params = one.partition(":")
        name = name.strip().lower()
        if name == "petersen":
            graphs.append(gen_kneser(5, 2).with_name("Petersen"))
            continue
        if name not in FAMILIES:
            raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}, petersen")
        fn, keys = FAMILIES[name]
        values: dict[str, list] = {}
        for item in filter(None, params.split(",")):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in keys:
                raise ValueError(f"family {name} takes parameters {keys}, got {key!r}")
            if key == "parts":
                values[key] = [[int(x) for x in grp.split("/")] for grp in val.split("|")]
            else:
                values[key] = _int_range(val)
        missing = [k for k in keys if k not in values]
        if missing:
            raise ValueError(f"family {name} is missing parameters {missing}")
        found = 0
        for combo in product(*(values[k] for k in keys)):
            try:
                graphs.append(fn(*combo))
                found += 1
            except GraphError:
                continue
        if not found:
            raise ValueError(f"family spec {one!r} produced no graphs")
    return graphs


@dataclass
class Corpus:
    description: str
    graphs: list[Graph]
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)


def resolve_corpus(spec: str) -> Corpus:
    """``exhaustive:N`` / ``exhaustive:A..B``, ``file:PATH`` or ``family:SPEC``."""
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "exhaustive":
        ns = _int_range(rest.replace("-", ".."))
        graphs = [g for n in ns for g in enumerate_labeled_graphs(n)]
        return Corpus(spec, graphs)
    if kind == "file":
        graphs, diags = read_graph6_file(rest)
        return Corpus(spec, graphs, diags)
    if kind == "family":
        return Corpus(spec, family_graphs(rest))
    raise ValueError(f"corpus must be exhaustive:N, file:PATH or family:SPEC, got {spec!r}")


# --- evaluation and reports ----------------------------------------------


@dataclass
class CheckOutcome:
    graph_name: str
    order: int
    inertia: Inertia
    chi: int | None
    chi_f: Fraction | None
    verdicts: dict[str, Verdict]

    @property
    def violated(self) -> list[str]:
        return [c for c, v in self.verdicts.items() if v.status is Status.VIOLATED]

    def row(self) -> dict:
        return {
            "name": self.graph_name,
            "order": self.order,
            "n_plus": self.inertia.n_plus,
            "n_zero": self.inertia.n_zero,
            "n_minus": self.inertia.n_minus,
            "chi": self.chi,
            "chi_f": None if self.chi_f is None else f"{self.chi_f.numerator}/{self.chi_f.denominator}",
            "verdicts": {c: str(v) for c, v in self.verdicts.items()},
        }


def evaluate_graph(g: Graph, claims: Iterable[str], budget: Budget | None = None) -> CheckOutcome:
    budget = budget or Budget()
    facts = GraphFacts(g, budget)
    verdicts = {}
    for claim in claims:
        if claim == "THEOREM1":
            v = check_theorem1(g, facts)
        elif claim == "COROLLARY1":
            v = check_corollary1(g, facts)
        elif claim == "CONJECTURE1":
            v = check_conjecture1(g, facts)
        elif claim == "THEOREM3":
            v = check_nordhaus_gaddum(g, facts)
        elif claim == "CONJECTURE2":
            v = check_conjecture2(g, facts)
        elif claim == "COROLLARY3":
            v = check_corollary3(g, budget.corollary3_trials, budget.seed, facts)
        else:
            raise ValueError(f"unknown claim {claim!r}")
        verdicts[claim] = v
    return CheckOutcome(g.name or encode_graph6(g), g.order, facts.inertia, facts.cached("chi"), facts.cached("chi_f"), verdicts)


def _evaluate_star(args):
    return evaluate_graph(*args)


@dataclass
class Report:
    corpus: str
    claims: list[str]
    outcomes: list[CheckOutcome]
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        out = {}
        for claim in self.claims:
            tally = Counter(o.verdicts[claim].status.value for o in self.outcomes)
            out[claim] = {s.value: tally.get(s.value, 0) for s in Status}
        return out

    @property
    def violations(self) -> list[tuple[str, str, Verdict]]:
        return [(o.graph_name, c, o.verdicts[c]) for o in self.outcomes for c in o.violated]

    def to_dict(self) -> dict:
        outcomes = []
        for o in self.outcomes:
            row = o.row()
            wit = {c: _jsonable(v.witness) for c, v in o.verdicts.items() if v.status is Status.VIOLATED}
            if wit:
                row["witnesses"] = wit
            outcomes.append(row)
        return {
            "corpus": self.corpus,
            "claims": list(self.claims),
            "outcomes": outcomes,
            "summary": self.summary,
            "diagnostics": [{"line": d.line, "text": d.text, "message": d.message} for d in self.diagnostics],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        base = ["name", "order", "n_plus", "n_zero", "n_minus", "chi", "chi_f"]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(base + list(self.claims))
        for o in self.outcomes:
            r = o.row()
            w.writerow([r[c] for c in base] + [r["verdicts"][c] for c in self.claims])
        return buf.getvalue()

    def to_text(self, max_rows: int = 50) -> str:
        lines = [f"corpus: {self.corpus}", f"graphs: {len(self.outcomes)}", ""]
        for claim, counts in self.summary.items():
            nonzero = ", ".join(f"{k}={v}" for k, v in counts.items() if v)
            lines.append(f"  {claim:<12} {nonzero}")
        viol = self.violations
        if viol:
            lines.append("")
            lines.append(f"VIOLATIONS ({len(viol)}):")
            for name, claim, v in viol[:max_rows]:
                lines.append(f"  {name}  {claim}  {json.dumps(_jsonable(v.witness), sort_keys=True)}")
        for d in self.diagnostics:
            lines.append(f"line {d.line}: {d.message}: {d.text!r}")
        return "\n".join(lines) + "\n"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def run_corpus(corpus: Corpus | str, claims: Iterable[str] = CLAIMS, budget: Budget | None = None, jobs: int = 1) -> Report:
    if isinstance(corpus, str):
        corpus = resolve_corpus(corpus)
    claims = [c.upper() for c in claims]
    for c in claims:
        if c not in CLAIMS:
            raise ValueError(f"unknown claim {c!r}; choose from {', '.join(CLAIMS)}")
    budget = budget or Budget()
    work = [(g, claims, budget) for g in corpus.graphs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(_evaluate_star, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        outcomes = [_evaluate_star(w) for w in work]
    outcomes.sort(key=lambda o: (o.order, o.graph_name))
    return Report(corpus.description, claims, outcomes, list(corpus.diagnostics))


def parse_claims(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return list(CLAIMS)
    return [c.strip().upper() for c in re.split(r"[,\s]+", text) if c.strip()]


def courant_weyl_gaps(g: Graph, tol: float = 1e-9) -> list[float]:
    """mu_i(G) + mu_{n-i+2}(complement) for i = 2..n; each should be <= -1."""
    n = g.order
    a = numeric_spectrum(g, tol).values
    b = numeric_spectrum(complement(g), tol).values
    return [a[i - 1] + b[n - i + 1] for i in range(2, n + 1)]
