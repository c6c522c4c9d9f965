"""Tabulate spectral lower bounds next to exact chi_f and chi for some small graphs."""
import argparse

from inertial.bounds import BoundUndefined, hoffman_bound, hoffman_full_chi, inertial_bound
from inertial.chromatic import chromatic_number, fractional_chromatic
from inertial.graph import (
    gen_barbell,
    gen_complete_multipartite,
    gen_cycle,
    gen_generalized_petersen,
    gen_kneser,
)
from inertial.inertia import inertia, numeric_spectrum

GRAPHS = [
    gen_cycle(5), gen_cycle(7), gen_kneser(5, 2), gen_kneser(6, 2), gen_kneser(7, 2),
    gen_complete_multipartite([1, 2, 3]), gen_barbell(4), gen_generalized_petersen(10, 3),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--chif-order", type=int, default=24)
    args = ap.parse_args()

    print(f"{'graph':<16}{'inertia':<14}{'inertial':>10}{'hoffman':>10}{'full':>6}{'chi_f':>8}{'chi':>5}")
    for g in GRAPHS:
        i, s = inertia(g), numeric_spectrum(g)
        try:
            full = str(hoffman_full_chi(s))
        except BoundUndefined:
            full = "-"
        chif = fractional_chromatic(g, args.chif_order) if g.order <= args.chif_order else "-"
        print(f"{g.name:<16}{str(tuple(i)):<14}{str(inertial_bound(i)):>10}{hoffman_bound(s):>10.4f}"
              f"{full:>6}{str(chif):>8}{chromatic_number(g):>5}")


if __name__ == "__main__":
    main()
