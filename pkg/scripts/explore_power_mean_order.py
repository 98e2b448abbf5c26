"""Scan the power-mean order r for the G and G* lower bounds.

For r <= 0 the weighted power mean of G at two betas stays below G at the
interpolated beta. For r > 0 the bound is not expected to hold everywhere:
G* breaks down as s -> 0 and G as s grows. This prints the smallest margin
found along an s-scan for each order.
"""
import argparse
import math

import numpy as np

from volterrakit import ineqlab as L
from volterrakit.errors import PrecisionLossError


def scan(which, r, args):
    worst = (math.inf, None)
    for s in np.geomspace(args.s_min, args.s_max, args.points):
        try:
            rep = L.check_g_power_mean(which, r, args.beta1, args.beta2, args.lam, args.x,
                                       args.alpha, float(s), enforce=False)
        except PrecisionLossError:
            continue
        if rep.margin < worst[0]:
            worst = (rep.margin, rep)
    return worst[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x", type=float, default=0.5)
    ap.add_argument("--alpha", type=float, default=2.0)
    ap.add_argument("--beta1", type=float, default=0.0)
    ap.add_argument("--beta2", type=float, default=2.0)
    ap.add_argument("--lam", type=float, default=0.5)
    ap.add_argument("--s-min", type=float, default=1e-3)
    ap.add_argument("--s-max", type=float, default=20.0)
    ap.add_argument("--points", type=int, default=25)
    ap.add_argument("--orders", default="-2,-1,0,0.5,1,2")
    args = ap.parse_args()

    print(f"{'which':<7}{'r':>6}{'worst s':>12}{'margin':>14}  verdict")
    for which in ("g", "g_star"):
        for r in (float(v) for v in args.orders.split(",")):
            rep = scan(which, r, args)
            if rep is None:
                print(f"{which:<7}{r:>6} (no resolved points)")
                continue
            print(f"{which:<7}{r:>6}{rep.params['s']:>12.4g}{rep.margin:>14.4e}  {rep.verdict}")


if __name__ == "__main__":
    main()
