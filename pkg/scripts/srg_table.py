"""List feasible strongly regular parameter sets with predicted inertia and the n+ ceiling."""
import argparse
from itertools import product

from inertial.srg import (
    InfeasibleParameters,
    SrgParams,
    conjecture2_bound,
    srg_complement_params,
    srg_inertia,
    srg_multiplicities,
)


def feasible(max_n):
    for n, k, lam, mu in product(range(2, max_n + 1), range(1, max_n), range(max_n), range(1, max_n)):
        # k = n - 1 is a complete graph, where mu is vacuous
        if k >= n - 1 or lam >= k or mu > k:
            continue
        try:
            yield SrgParams(n, k, lam, mu)
        except InfeasibleParameters:
            pass


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=30)
    args = ap.parse_args()

    print(f"{'params':<24}{'(f, g)':<10}{'inertia':<14}{'ceiling':>8}  complement")
    for p in feasible(args.max_n):
        i = srg_inertia(p)
        flag = " <-- exceeds" if i.n_plus > conjecture2_bound(p.n) else ""
        try:
            comp = str(srg_complement_params(p))
        except InfeasibleParameters:
            comp = "-"
        print(f"{str(p):<24}{str(srg_multiplicities(p)):<10}{str(tuple(i)):<14}{conjecture2_bound(p.n):>8}  {comp}{flag}")


if __name__ == "__main__":
    main()
