"""Run the claim checks over every labeled graph up to a given order."""
import argparse
import time

from inertial.harness import Budget, parse_claims, run_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=5)
    ap.add_argument("--claims", default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="write the JSON report here")
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_corpus(f"exhaustive:1..{args.max_order}", parse_claims(args.claims),
                        Budget(seed=args.seed), jobs=args.jobs)
    print(report.to_text())
    print(f"{len(report.outcomes)} graphs in {time.perf_counter() - t0:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())


if __name__ == "__main__":
    main()
