"""Command line interface: ``python -m inertial <command> ...``.

Exit codes: 0 success / no violations, 2 violations found, 1 operational error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from math import ceil

from .bounds import BoundUndefined, hoffman_bound, hoffman_full_chi, inertial_bound
from .chromatic import (
    DEFAULT_CHIF_ORDER,
    DEFAULT_VERTEX_BUDGET,
    BudgetExceeded,
    chromatic_number,
    fractional_chromatic,
    independence_number,
)
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_kneser,
    gen_path,
    parse_graph6,
    read_graph6_file,
)
from .harness import Budget, family_graphs, parse_claims, run_corpus
from .inertia import char_poly, inertia, inertia_from_charpoly, numeric_spectrum
from .srg import (
    InfeasibleParameters,
    SrgParams,
    srg_chif_lower,
    srg_complement_params,
    srg_inertia,
    srg_multiplicities,
)

_SHORT = {"C": gen_cycle, "K": gen_complete, "P": gen_path, "E": gen_empty}


def resolve_graphs(arg: str) -> list[Graph]:
    """A graph6 string, ``@file``, a family spec (``kneser:p=5,k=2``) or a short name (C5, K4, petersen)."""
    if arg.startswith("@"):
        graphs, diags = read_graph6_file(arg[1:])
        for d in diags:
            print(f"{arg[1:]}:{d.line}: {d.message}", file=sys.stderr)
        return graphs
    if ":" in arg or arg.lower() == "petersen":
        return family_graphs(arg)
    m = re.fullmatch(r"([CKPE])(\d+)", arg)
    if m:
        return [_SHORT[m.group(1)](int(m.group(2)))]
    return [parse_graph6(arg)]


def _fmt(x: Fraction) -> str:
    return str(x) if x.denominator != 1 else str(x.numerator)


def cmd_inertia(args) -> int:
    for g in resolve_graphs(args.graph):
        p = char_poly(g)
        i = inertia_from_charpoly(p)
        print(f"{g.name}\t{i.n_plus} {i.n_zero} {i.n_minus}")
        if args.charpoly:
            print(f"  charpoly: {p}")
    return 0


def cmd_bounds(args) -> int:
    for g in resolve_graphs(args.graph):
        print(f"{g}")
        if g.n_edges == 0:
            print("  edgeless: spectral bounds undefined")
            continue
        i = inertia(g)
        spec = numeric_spectrum(g, args.tol)
        ib = inertial_bound(i)
        rows = [
            ("inertia", f"{i.n_plus} {i.n_zero} {i.n_minus}"),
            ("inertial bound", f"{_fmt(ib)} = {float(ib):.6f}"),
            ("Hoffman bound", f"{hoffman_bound(spec):.6f}"),
            ("full Hoffman chi >=", str(hoffman_full_chi(spec, args.tol))),
        ]
        if g.order <= args.vertex_budget:
            rows.append(("chi", str(chromatic_number(g, args.vertex_budget, lower_bound=ceil(ib)))))
        else:
            rows.append(("chi", "skipped (budget)"))
        if g.order <= args.chif_order:
            rows.append(("chi_f", _fmt(fractional_chromatic(g, args.chif_order))))
        else:
            rows.append(("chi_f", "skipped (budget)"))
        for label, val in rows:
            print(f"  {label:<20} {val}")
    return 0


def cmd_chi(args) -> int:
    for g in resolve_graphs(args.graph):
        lb = None
        if g.n_edges and g.order <= 40:
            lb = ceil(inertial_bound(inertia(g)))
        print(f"{g.name}\t{chromatic_number(g, args.vertex_budget, lower_bound=lb)}")
    return 0


def cmd_chif(args) -> int:
    for g in resolve_graphs(args.graph):
        print(f"{g.name}\t{_fmt(fractional_chromatic(g, args.chif_order))}")
    return 0


def cmd_alpha(args) -> int:
    for g in resolve_graphs(args.graph):
        print(f"{g.name}\t{independence_number(g, args.vertex_budget)}")
    return 0


def cmd_srg(args) -> int:
    p = SrgParams(args.n, args.k, args.lam, args.mu)
    f, g = srg_multiplicities(p)
    print(f"{p}: feasible")
    print(f"  multiplicities f, g   {f}, {g}")
    try:
        print(f"  complement            {srg_complement_params(p)}")
    except InfeasibleParameters as exc:
        print(f"  complement            not an SRG with mu >= 1 ({exc})")
    i = srg_inertia(p)
    print(f"  inertia               {i.n_plus} {i.n_zero} {i.n_minus}")
    try:
        print(f"  chi_f lower bound     {_fmt(srg_chif_lower(p))}")
    except InfeasibleParameters:
        print("  chi_f lower bound     n/a (singular)")
    return 0


def cmd_verify(args) -> int:
    budget = Budget(
        vertex_budget=args.vertex_budget,
        chif_max_order=args.chif_order,
        corollary3_trials=args.trials,
        seed=args.seed,
    )
    report = run_corpus(args.corpus, parse_claims(args.claims), budget, jobs=args.jobs)
    text = {"json": report.to_json, "csv": report.to_csv, "text": report.to_text}[args.format]()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        if args.format != "text":
            sys.stderr.write(report.to_text())
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    for d in report.diagnostics:
        print(f"line {d.line}: {d.message}", file=sys.stderr)
    if report.violations:
        print(f"{len(report.violations)} violation(s) found", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inertial", description="Graph inertia and spectral chromatic bounds")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget_opts(p):
        p.add_argument("--vertex-budget", type=int, default=DEFAULT_VERTEX_BUDGET)
        p.add_argument("--chif-order", type=int, default=DEFAULT_CHIF_ORDER)

    p = sub.add_parser("inertia", help="exact inertia n+ n0 n-")
    p.add_argument("graph")
    p.add_argument("--charpoly", action="store_true", help="also print the characteristic polynomial")
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("bounds", help="inertial, Hoffman and full Hoffman bounds")
    p.add_argument("graph")
    p.add_argument("--tol", type=float, default=1e-9)
    budget_opts(p)
    p.set_defaults(func=cmd_bounds)

    for name, fn, help_ in (("chi", cmd_chi, "chromatic number"), ("chif", cmd_chif, "fractional chromatic number"),
                            ("alpha", cmd_alpha, "independence number")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph")
        budget_opts(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="check the claims over a corpus")
    p.add_argument("--claims", default="all", help="comma list of theorem1,corollary1,conjecture1,theorem3,conjecture2,corollary3")
    p.add_argument("--corpus", required=True, help="exhaustive:N | exhaustive:A..B | file:PATH | family:SPEC")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials", type=int, default=10, help="random weightings per graph for corollary3")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out")
    budget_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("srg", help="strongly regular graph parameter arithmetic")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("mu", type=int)
    p.set_defaults(func=cmd_srg)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, Graph6Error, InfeasibleParameters, BoundUndefined, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
