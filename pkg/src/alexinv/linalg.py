"""Exact integer and rational linear algebra: Smith normal form,
rank / nullspace over Q, and rank over cyclotomic fields.

Matrices are plain lists of lists; everything is small and desk-scale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .cyclotomic import CyclotomicElement


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns min(rows, cols) nonnegative diagonal entries, zeros trailing.
    """
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return []
    rows, cols = len(a), len(a[0])
    n = min(rows, cols)
    diag: List[int] = []
    top = 0
    while top < n:
        # find a nonzero pivot
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        a[top], a[i] = a[i], a[top]
        for r in range(rows):
            a[r][top], a[r][j] = a[r][j], a[r][top]
        # reduce row and column below/right of the pivot
        while True:
            changed = False
            for i in range(top + 1, rows):
                if a[i][top]:
                    q = a[i][top] // a[top][top]
                    for j in range(top, cols):
                        a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                    changed = True
            for j in range(top + 1, cols):
                if a[top][j]:
                    q = a[top][j] // a[top][top]
                    for i in range(top, rows):
                        a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for i in range(top, rows):
                            a[i][top], a[i][j] = a[i][j], a[i][top]
                    changed = True
            if not changed:
                break
        # make the pivot divide every remaining entry
        d = a[top][top]
        fix = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if a[i][j] % d:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            for j in range(top, cols):
                a[top][j] += a[fix][j]
            continue
        diag.append(abs(d))
        top += 1
    diag += [0] * (n - len(diag))
    # enforce divisibility chain sign conventions (already divisible by construction)
    return diag


def cokernel_invariants(matrix: Sequence[Sequence[int]], ambient_rank: int) -> Tuple[int, List[int]]:
    """Free rank and torsion factors (>1) of Z^ambient_rank / row span."""
    rows = [list(r) for r in matrix]
    if not rows:
        return ambient_rank, []
    diag = smith_normal_form(rows)
    nonzero = [d for d in diag if d != 0]
    free = ambient_rank - len(nonzero)
    torsion = [d for d in nonzero if d > 1]
    return free, torsion


def _kernel_echelon(matrix, rows, cols):
    """Row-reduce over Q; return (pivots, reduced matrix)."""
    a = [[Fraction(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots, a


def rational_rank(matrix: Sequence[Sequence]) -> int:
    if not matrix or not matrix[0]:
        return 0
    pivots, _ = _kernel_echelon(matrix, len(matrix), len(matrix[0]))
    return len(pivots)


def rational_nullspace(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis of the right nullspace over Q."""
    if not matrix:
        return []
    rows, cols = len(matrix), len(matrix[0])
    pivots, a = _kernel_echelon(matrix, rows, cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def integer_kernel_basis(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    """A lattice basis of the integer kernel {v : A v = 0}.

    The basis vectors extend to a unimodular matrix, so stacking them as
    rows gives a surjection onto Z^nullity.
    """
    a = [[int(x) for x in row] for row in matrix]
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    # track column operations on an identity matrix
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_op(j, k, q):  # col_j -= q * col_k
        for i in range(rows):
            a[i][j] -= q * a[i][k]
        for i in range(cols):
            v[i][j] -= q * v[i][k]

    def col_swap(j, k):
        for i in range(rows):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        for i in range(cols):
            v[i][j], v[i][k] = v[i][k], v[i][j]

    r = 0
    for i in range(rows):
        # clear row i to a single entry in column r via gcd column ops
        while True:
            nz = [j for j in range(r, cols) if a[i][j]]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(a[i][j]))
            col_swap(r, jmin)
            done = True
            for j in range(r + 1, cols):
                if a[i][j]:
                    q = a[i][j] // a[i][r]
                    col_op(j, r, q)
                    if a[i][j]:
                        done = False
            if done:
                break
        if r < cols and a[i][r]:
            r += 1
        if r == cols:
            break
    kernel_cols = [j for j in range(cols) if all(a[i][j] == 0 for i in range(rows))]
    return [[v[i][j] for i in range(cols)] for j in kernel_cols]


def cyclotomic_rank(matrix: Sequence[Sequence[CyclotomicElement]]) -> int:
    """Rank of a matrix over the cyclotomic field by Gaussian elimination."""
    if not matrix or not matrix[0]:
        return 0
    a = [list(row) for row in matrix]
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        pr = None
        for i in range(rank, rows):
            if a[i][c]:
                pr = i
                break
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        inv = a[rank][c].inverse()
        for i in range(rank + 1, rows):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def maximal_minor_gcd(matrix: Sequence[Sequence[int]]) -> int:
    """gcd of the rank-sized minors; 0 for the zero matrix.  Test oracle."""
    from itertools import combinations

    if not matrix or not matrix[0]:
        return 0
    r = rational_rank(matrix)
    if r == 0:
        return 0
    rows, cols = len(matrix), len(matrix[0])

    def det(sub):
        n = len(sub)
        if n == 1:
            return sub[0][0]
        total = 0
        for j in range(n):
            if sub[0][j] == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in sub[1:]]
            total += (-1) ** j * sub[0][j] * det(minor)
        return total

    g = 0
    for ri in combinations(range(rows), r):
        for ci in combinations(range(cols), r):
            sub = [[matrix[i][j] for j in ci] for i in ri]
            g = gcd(g, det(sub))
    return abs(g)
