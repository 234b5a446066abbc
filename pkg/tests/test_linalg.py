from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from alexinv.linalg import (
    cokernel_invariants,
    integer_kernel_basis,
    maximal_minor_gcd,
    rational_nullspace,
    rational_rank,
    smith_normal_form,
)


def test_smith_examples():
    assert smith_normal_form([[2, 3]]) == [1]
    assert smith_normal_form([[2, 2]]) == [2]
    assert smith_normal_form([[7]]) == [7]
    assert cokernel_invariants([[2, 3]], 2) == (1, [])
    assert cokernel_invariants([[2, 2]], 2) == (1, [2])
    assert cokernel_invariants([[6]], 1) == (0, [6])


matrices = st.lists(
    st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=2, max_size=4
)


@given(matrices)
def test_smith_divisibility_chain_and_minor_gcd(m):
    diag = smith_normal_form(m)
    nonzero = [d for d in diag if d]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    product = 1
    for d in nonzero:
        product *= d
    assert product == maximal_minor_gcd(m) or (not nonzero and maximal_minor_gcd(m) == 0)


def test_rank_examples():
    assert rational_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rational_rank([[0] * 5, [0] * 5]) == 0
    pts = [0, 1, -1, 2, -2, 3]
    vander = [[1, x, x * x, x * x, x**3, x**4] for x in pts]
    # quadric monomials 1, x, y, x^2, xy, y^2 evaluated on y = x^2
    vander = [[1, x, x * x, x * x, x * x * x, x**4] for x in pts]
    assert rational_rank(vander) == 5


def test_nullspace_is_conic():
    pts = [0, 1, -1, 2, -2, 3]
    rows = [[1, x, x * x, x * x, x**3, x**4] for x in pts]
    basis = rational_nullspace(rows)
    assert len(basis) == 1
    for row in rows:
        assert sum(c * v for c, v in zip(row, basis[0])) == 0


@given(matrices)
def test_nullspace_vectors_annihilate(m):
    for v in rational_nullspace(m):
        for row in m:
            assert sum(Fraction(c) * x for c, x in zip(row, v)) == 0


@given(matrices)
def test_integer_kernel_basis(m):
    basis = integer_kernel_basis(m)
    assert len(basis) == len(m[0]) - rational_rank(m)
    for v in basis:
        for row in m:
            assert sum(c * x for c, x in zip(row, v)) == 0
    if basis:
        # the basis is primitive: stacking it gives a surjection onto Z^k
        diag = smith_normal_form(basis)
        assert [d for d in diag if d] == [1] * len(basis)
