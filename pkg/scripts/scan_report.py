"""Sweep eps and report, for each, the odd-degree flag graphs beating
Delta^(2-eps) + 2 Delta^(1-eps/3) + Delta^(1-2eps/3) + 3.

    python scripts/scan_report.py --d-max 11 --q-max 9
"""

import argparse
import sys
from fractions import Fraction

from arcdiam.bounds import scan


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--d-max", type=int, default=11)
    ap.add_argument("--q-max", type=int, default=9)
    ap.add_argument("--eps", nargs="*", default=["1", "3/5", "1/2", "3/7", "1/3"])
    args = ap.parse_args(argv)

    print(f"{'eps':>6} {'d':>3} {'q':>3} {'delta':>12} {'order':>16} "
          f"{'N/Delta^2':>10} {'bits':>5}")
    for text in args.eps:
        eps = Fraction(text)
        for r in scan(eps, args.d_max, args.q_max):
            ratio = r.order_n / r.delta ** 2
            mark = "" if r.strict else "  (not strict)"
            print(f"{str(eps):>6} {r.d:>3} {r.q:>3} {r.delta:>12} {r.order_n:>16} "
                  f"{ratio:>10.6f} {r.decided_bits:>5}{mark}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
