#!/usr/bin/env python3
"""Tabulate Betti numbers of finite covers: unbranched abelian covers of
free groups and of the trefoil group, and branched cyclic covers of the
trefoil, against the depth of the torsion characters involved.

Run:  python scripts/run_cover_table.py
"""

from fractions import Fraction

from alexinv.groups import (
    CharacterPoint,
    branched_cover_betti,
    depth,
    free_group,
    trefoil_presentation,
    unbranched_cover_betti,
)


def main():
    f2 = free_group(2)
    print("unbranched covers of the wedge of two circles (b_1 = 1 + n1 n2):")
    for n1 in range(1, 5):
        row = [unbranched_cover_betti(f2, (n1, n2)) for n2 in range(1, 5)]
        print(f"    n1 = {n1}: {row}")
    print()

    tref = trefoil_presentation()
    print("trefoil: depth at characters k/n, and cover Betti numbers")
    for n in (2, 3, 5, 6, 12):
        depths = [depth(tref, CharacterPoint([Fraction(k, n)])) for k in range(1, n)]
        unbr = unbranched_cover_betti(tref, (n,))
        br = branched_cover_betti({frozenset({0}): tref}, (n,))
        print(f"    n = {n:2d}: depths {depths}, unbranched b_1 = {unbr}, branched b_1 = {br}")


if __name__ == "__main__":
    main()
