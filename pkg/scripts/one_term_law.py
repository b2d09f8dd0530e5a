#!/usr/bin/env python3
"""Scaled one-term defect k |zero_k - (k + nu/2 + offset) pi| across index windows."""

import argparse
import itertools

from ultrabessel.zeros import one_term_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nus", default="0,1,3.7")
    ap.add_argument("--deltas", default="0,1.5")
    ap.add_argument("--k-max", type=int, default=10_000)
    a = ap.parse_args()
    windows = [(10, 100), (100, 1000), (1000, 5000), (5000, a.k_max)]
    print("kind,nu,delta," + ",".join(f"max_{lo}_{hi}" for lo, hi in windows))
    for kind, nu, delta in itertools.product(("AZero", "BZero"), a.nus.split(","), a.deltas.split(",")):
        _, rows = one_term_check(kind, float(nu), float(delta), a.k_max, 10)
        maxima = [max(r[2] for r in rows if lo <= r[0] <= hi) for lo, hi in windows]
        print(f"{kind},{nu},{delta}," + ",".join(f"{m:.6f}" for m in maxima), flush=True)


if __name__ == "__main__":
    main()
