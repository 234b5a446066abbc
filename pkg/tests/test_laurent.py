from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alexinv.errors import NotPolynomial, ZeroInput
from alexinv.laurent import (
    FormalCycloProduct,
    LaurentPolynomial,
    common_root_count,
    exact_divide,
    normalize_unit,
    univariate_gcd,
)

t = LaurentPolynomial.variable()
PHI6 = t**2 - t + 1


def poly_from(coeffs, lo=0):
    return LaurentPolynomial(1, {(i + lo,): c for i, c in enumerate(coeffs)})


coeff = st.integers(-5, 5)
polys = st.builds(
    poly_from,
    st.lists(coeff, min_size=1, max_size=9),
    st.integers(-3, 3),
).filter(lambda p: not p.is_zero())


def test_normalize_unit_examples():
    assert normalize_unit(-(t**3) + t**2 - t) == PHI6
    assert normalize_unit(PHI6) == PHI6
    # units are only +-t^a, so content is preserved
    assert normalize_unit(LaurentPolynomial.monomial(5, (-2,))) == LaurentPolynomial.constant(5)


def test_normalize_unit_zero_rejected():
    with pytest.raises(ZeroInput):
        normalize_unit(LaurentPolynomial.zero(1))


@given(polys)
def test_normalize_unit_idempotent(p):
    assert normalize_unit(normalize_unit(p)) == normalize_unit(p)


@given(polys, polys)
def test_normalize_unit_multiplicative(p, q):
    assert normalize_unit(p * q) == normalize_unit(normalize_unit(p) * normalize_unit(q))


def test_gcd_examples():
    t6 = LaurentPolynomial(1, {(6,): 1, (0,): -1})
    assert univariate_gcd(PHI6, t6) == PHI6
    assert univariate_gcd(t - 1, PHI6) == LaurentPolynomial.one()
    assert univariate_gcd(PHI6, LaurentPolynomial.zero(1)) == PHI6
    with pytest.raises(ZeroInput):
        univariate_gcd(LaurentPolynomial.zero(1), LaurentPolynomial.zero(1))


@given(polys, polys)
def test_gcd_divides_and_lcm_identity(p, q):
    g = univariate_gcd(p, q)
    assert not exact_divide(p, g).is_zero()
    assert not exact_divide(q, g).is_zero()
    lcm = exact_divide(p * q, g)
    # gcd * lcm = p * q up to a unit
    assert normalize_unit(g * lcm) == normalize_unit(p * q)


def test_common_root_count():
    assert common_root_count(PHI6, 6) == 2
    assert common_root_count(PHI6, 5) == 0
    for n in (1, 2, 5, 12):
        assert common_root_count(t - 1, n) == 1


def test_exact_divide_multivariable():
    a = LaurentPolynomial(2, {(1, 1): 1, (0, 0): -1})
    b = LaurentPolynomial(2, {(2, 2): 1, (0, 0): -1})
    q = exact_divide(b, a)
    assert q == LaurentPolynomial(2, {(1, 1): 1, (0, 0): 1})
    with pytest.raises(NotPolynomial):
        exact_divide(a, b)


def test_cyclo_product_merging_and_unit():
    f = FormalCycloProduct.one_minus_power((1, 2), 3)
    g = FormalCycloProduct.one_minus_power((1, 2), -3)
    assert (f * g).is_unit()


def test_cyclo_product_diagonal():
    h = FormalCycloProduct.one_minus_power((1, 1, 1))
    assert h.diagonal_specialize() == FormalCycloProduct.one_minus_power((3,))


@given(
    st.lists(
        st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-2, 2)),
        max_size=4,
    ),
    st.lists(
        st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-2, 2)),
        max_size=4,
    ),
)
def test_diagonal_specialize_multiplicative(fs, gs):
    def build(items):
        out = FormalCycloProduct.one(2)
        for v, e in items:
            if any(v) and sum(v) != 0:
                out = out * FormalCycloProduct.one_minus_power(v, e)
        return out

    f, g = build(fs), build(gs)
    assert (f * g).diagonal_specialize() == f.diagonal_specialize() * g.diagonal_specialize()


def test_expand_cusp_pipeline():
    zeta = (
        FormalCycloProduct.one_minus_power((2,))
        * FormalCycloProduct.one_minus_power((3,))
        * FormalCycloProduct.one_minus_power((6,), -1)
    )
    with pytest.raises(NotPolynomial):
        zeta.expand()
    delta = (FormalCycloProduct.t_minus_one() * zeta.inverse()).expand()
    assert normalize_unit(delta) == PHI6


def test_serialization_round_trip():
    from alexinv.serialize import laurent_from_json, laurent_to_json

    p = LaurentPolynomial(2, {(1, -2): Fraction(3, 7), (0, 0): -1})
    assert laurent_from_json(laurent_to_json(p)) == p
