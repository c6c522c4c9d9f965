"""Compare exact Kneser inertia with the binomial closed form n+ = C(p-1, k), n- = C(p-1, k-1).

The closed form matches only for even k; for odd k the two counts trade places.
"""
import argparse
from math import comb

from inertial.graph import gen_kneser
from inertial.inertia import inertia


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=9)
    args = ap.parse_args()

    print(f"{'p':>3}{'k':>3}  {'exact':<16}{'closed form':<16}match")
    for p in range(3, args.max_p + 1):
        for k in range(1, (p - 1) // 2 + 1):
            exact = tuple(inertia(gen_kneser(p, k)))
            closed = (comb(p - 1, k), 0, comb(p - 1, k - 1))
            print(f"{p:>3}{k:>3}  {str(exact):<16}{str(closed):<16}{exact == closed}")


if __name__ == "__main__":
    main()
