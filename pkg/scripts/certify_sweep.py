"""Certify every flag graph and Hamming graph up to a vertex cap and print
one line per graph with its timings.

    python scripts/certify_sweep.py --max-order 2000 --brute-budget 120
"""

import argparse
import sys

from arcdiam.bounds import flag_params
from arcdiam.certify import certify
from arcdiam.gf import is_prime_power


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--max-order", type=int, default=2000)
    ap.add_argument("--brute-budget", type=int, default=120)
    ap.add_argument("--variant", default="degree-consistent")
    args = ap.parse_args(argv)

    jobs = []
    for q in range(2, 64):
        if is_prime_power(q):
            d = 3
            while flag_params(d, q)[1] <= args.max_order:
                jobs.append(("flag_graph", {"d": d, "q": q, "variant": args.variant}))
                d += 1
    q = 2
    while q * q <= args.max_order:
        jobs.append(("hamming2", {"q": q}))
        q += 1

    failures = 0
    for family, params in jobs:
        n = flag_params(params["d"], params["q"])[1] if family == "flag_graph" else params["q"] ** 2
        mode = "both" if n <= args.brute_budget else "orbit"
        c = certify(family, params, mode=mode, budget=args.brute_budget)
        failures += not c.passed
        total = sum(c.timing.values())
        tag = " ".join(f"{k}={v}" for k, v in params.items())
        print(f"{family:10} {tag:40} n={c.order:<6} deg={c.degree!s:<5} diam={c.diameter} "
              f"girth={c.girth} arcs={c.arc_transitive:16} oracle={c.oracle_arc_transitive!s:5} "
              f"{'ok' if c.passed else 'FAIL'} {total:.3f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
