#!/usr/bin/env python3
"""Resolve a few plane-curve germs and print every local invariant the
package computes: the tree, the zeta function, local Alexander polynomials,
constants of quasiadjunction, faces, and log-canonical thresholds.

Run:  python scripts/run_local_invariants.py
"""

from alexinv.quasiadj import (
    constants_of_quasiadjunction,
    lct_threshold,
    polytopes_and_faces,
)
from alexinv.resolution import (
    PlaneCurveGerm,
    acampo_zeta,
    local_alexander,
    multivariable_link_alexander,
    resolve,
)

GERMS = [
    ("ordinary cusp", ["x^2 + y^3"]),
    ("(2,5) singularity", ["x^2 + y^5"]),
    ("(3,4) singularity", ["x^3 + y^4"]),
    ("node", ["x - y", "x + y"]),
    ("two transversal cusps", ["x^2 - y^3", "x^3 - y^2"]),
    ("four lines", ["x - y", "x + y", "x - 2*y", "x + 2*y"]),
]


def main():
    for label, components in GERMS:
        germ = PlaneCurveGerm.from_strings(*components)
        tree = resolve(germ)
        print(f"{label}: {germ}")
        for node in tree.nodes:
            print(
                f"    E{node.id}: a = {node.a}, c = {node.c}, "
                f"adjacent = {sorted(node.adjacent)}, chi_open = {node.chi_open()}"
            )
        print(f"    zeta = {acampo_zeta(tree)}")
        print(f"    Alexander (total linking) = {local_alexander(tree)}")
        if tree.r >= 2:
            print(f"    multivariable Alexander = {multivariable_link_alexander(tree)}")
        if tree.r == 1 and tree.nodes:
            print(f"    constants of quasiadjunction = {constants_of_quasiadjunction(tree)}")
        if tree.r <= 3 and tree.nodes:
            faces = polytopes_and_faces(tree)
            count = sum(len(qp.faces) for qp in faces)
            print(f"    faces of quasiadjunction: {count}")
        print(f"    lct along the diagonal = {lct_threshold(tree, [1] * tree.r)}")
        print()


if __name__ == "__main__":
    main()
