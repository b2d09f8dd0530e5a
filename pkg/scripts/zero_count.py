#!/usr/bin/env python3
"""y'-zero counts up to X = (s + nu/2 + 1/2) pi next to the phase prediction floor(h(X) + 1/4)."""

import argparse
import math

from ultrabessel.phase import h
from ultrabessel.zeros import count_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nus", default="0,2,60,120")
    ap.add_argument("--deltas", default="0,1")
    ap.add_argument("--s", default="40,80,100")
    a = ap.parse_args()
    print("nu,delta,s,X,count,phase_prediction,count_minus_s")
    for nu in map(float, a.nus.split(",")):
        for delta in map(float, a.deltas.split(",")):
            for s in map(int, a.s.split(",")):
                X = (s + nu / 2 + 0.5) * math.pi
                n = count_zeros("BZero", nu, delta, X)
                pred = math.floor(h(nu, X) + 0.25)
                print(f"{nu:g},{delta:g},{s},{X:.10f},{n},{pred},{n - s}")


if __name__ == "__main__":
    main()
