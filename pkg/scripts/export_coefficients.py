#!/usr/bin/env python3
"""Regenerate the exact coefficient table JSON for the zero expansion."""

import argparse
import json

from ultrabessel.mcmahon import MAX_ORDER, expansion_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", default="BZero")
    ap.add_argument("--order", type=int, default=MAX_ORDER)
    ap.add_argument("--out", default="coefficient_table.json")
    a = ap.parse_args()
    table = expansion_table(a.kind, a.order)
    with open(a.out, "w", encoding="utf-8") as fh:
        json.dump(table.to_json_dict(), fh, indent=2)
        fh.write("\n")
    for p, c in table.coeffs:
        print(f"c_{p} = {c}")


if __name__ == "__main__":
    main()
