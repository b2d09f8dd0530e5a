#!/usr/bin/env python3
"""Truncation-error slopes of the zero expansion against the high-precision oracle."""

import argparse
import itertools

from ultrabessel.zeros import convergence_study


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kinds", default="AZero,BZero")
    ap.add_argument("--nus", default="0,0.5,1,3.7")
    ap.add_argument("--deltas", default="-1,0,0.5,2")
    ap.add_argument("--k", default="20,40,80,160")
    ap.add_argument("--orders", default="0,1,2,3,4")
    a = ap.parse_args()
    ks = [int(v) for v in a.k.split(",")]
    orders = [int(v) for v in a.orders.split(",")]
    print("kind,nu,delta," + ",".join(f"slope_m{m}" for m in orders))
    for kind, nu, delta in itertools.product(a.kinds.split(","), a.nus.split(","), a.deltas.split(",")):
        s = convergence_study(kind, float(nu), float(delta), ks, orders)
        print(f"{kind},{nu},{delta}," + ",".join(f"{s.slopes[m]:.4f}" for m in orders), flush=True)


if __name__ == "__main__":
    main()
