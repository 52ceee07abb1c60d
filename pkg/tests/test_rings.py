"""Polynomial and Laurent-polynomial arithmetic.

Oracle notes: [DERIVED] values are checked against hand computation or a
second independent identity (e.g. prod of cyclotomics = t^n - 1);
[TRIVIAL] cases assert definitional behavior.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclocover.rings import (ExactDivisionError, GF, LaurentPoly,
                              MixedRingError, Poly, QQ, ZZ, canonical_associate,
                              cyclotomic, gcd_zz, laurent_normalize, poly_gcd,
                              poly_xgcd)


def P(*cs):
    return Poly(ZZ, cs)


def L(val, *cs):
    return LaurentPoly(ZZ, val, Poly(ZZ, cs))


class TestPolyBasics:
    def test_zero_normalization(self):
        # [TRIVIAL] trailing zeros are dropped
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero

    def test_degree_leading_constant(self):
        f = P(3, 0, -2)
        assert f.degree == 2 and f.leading == -2 and f.constant == 3

    def test_arithmetic(self):
        # [DERIVED] (t+1)(t-1) = t^2 - 1
        assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)
        assert P(1, 1) + P(-1, 1) == P(0, 2)
        assert P(1, 1) - P(1, 1) == Poly.zero(ZZ)
        assert (-P(1, -2)) == P(-1, 2)

    def test_pow(self):
        assert P(1, 1) ** 3 == P(1, 3, 3, 1)
        assert P(0, 1) ** 0 == Poly.one(ZZ)

    def test_divmod_exact_over_zz(self):
        q, r = divmod(P(-1, 0, 1), P(-1, 1))
        assert q == P(1, 1) and r.is_zero

    def test_divmod_inexact_leading_raises(self):
        with pytest.raises(ExactDivisionError):
            divmod(P(0, 0, 1), P(0, 2))

    def test_divmod_over_field(self):
        f = Poly(QQ, (1, 0, 1))
        g = Poly(QQ, (0, 2))
        q, r = divmod(f, g)
        assert q == Poly(QQ, (0, Fraction(1, 2))) and r == Poly(QQ, (1,))

    def test_content_primitive(self):
        f = P(-6, 0, -9)
        assert f.content() == 3
        assert f.primitive() == P(2, 0, 3)
        assert f.primitive().leading > 0

    def test_evaluate(self):
        assert P(1, -1, 1).evaluate(2) == 3
        assert Poly.zero(ZZ).evaluate(7) == 0

    def test_low_order_and_shift(self):
        assert P(0, 0, 5).low_order() == 2
        assert P(1, 2).shift(2) == P(0, 0, 1, 2)

    def test_mixed_ring_rejected(self):
        with pytest.raises(MixedRingError):
            P(1) + Poly(QQ, (1,))

    def test_bool_coefficient_rejected(self):
        with pytest.raises(TypeError):
            Poly(ZZ, (True,))


class TestGcd:
    def test_poly_gcd_monic(self):
        # [DERIVED] gcd(t^2-1, t^2-2t+1) = t - 1
        a = Poly(QQ, (-1, 0, 1))
        b = Poly(QQ, (1, -2, 1))
        assert poly_gcd(a, b) == Poly(QQ, (-1, 1))

    def test_poly_gcd_over_gf(self):
        F = GF(2)
        # over F_2, t^2 + 1 = (t+1)^2
        a = Poly(F, (1, 0, 1))
        b = Poly(F, (1, 1))
        assert poly_gcd(a, b) == Poly(F, (1, 1))

    def test_poly_xgcd_identity(self):
        a = Poly(QQ, (2, 0, 1))
        b = Poly(QQ, (1, 1))
        g, x, y = poly_xgcd(a, b)
        assert x * a + y * b == g
        assert g.is_monic()

    def test_gcd_zz_contents(self):
        # [DERIVED] gcd(2(t-1), 4(t^2-1)) = 2(t-1)
        a = P(-2, 2)
        b = P(-4, 0, 4)
        assert gcd_zz(a, b) == P(-2, 2)

    def test_gcd_zz_zero_arguments(self):
        assert gcd_zz(Poly.zero(ZZ), P(-3, 1)) == P(-3, 1)
        assert gcd_zz(P(0, -1), Poly.zero(ZZ)) == P(0, 1)


class TestCyclotomic:
    def test_small_values(self):
        # [DERIVED] standard table
        assert cyclotomic(1) == P(-1, 1)
        assert cyclotomic(2) == P(1, 1)
        assert cyclotomic(4) == P(1, 0, 1)
        assert cyclotomic(6) == P(1, -1, 1)
        assert cyclotomic(12) == P(1, 0, -1, 0, 1)

    @pytest.mark.parametrize("n", [1, 2, 6, 30, 105, 200])
    def test_product_identity(self, n):
        # [DERIVED] prod_{d | n} Phi_d = t^n - 1
        prod = Poly.one(ZZ)
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Poly(ZZ, (-1,) + (0,) * (n - 1) + (1,))

    def test_first_nontrivial_coefficient(self):
        # Phi_105 is the first with a coefficient of absolute value 2
        assert -2 in cyclotomic(105).coeffs

    def test_bad_index(self):
        with pytest.raises(ValueError):
            cyclotomic(0)


class TestLaurent:
    def test_valuation_normalization(self):
        f = L(0, 0, 0, 3, 1)
        assert f.val == 2 and f.body == P(3, 1)

    def test_zero_valuation(self):
        assert LaurentPoly.zero(ZZ).val == 0

    def test_add_across_valuations(self):
        # [DERIVED] t^-1 + t = t^-1 (1 + t^2)
        f = L(-1, 1) + L(1, 1)
        assert f.val == -1 and f.body == P(1, 0, 1)

    def test_cancellation_renormalizes(self):
        f = L(-2, 1, 1) - L(-2, 1)   # t^-2(1+t) - t^-2 = t^-1
        assert f == L(-1, 1)

    def test_mul(self):
        assert L(-1, 1, 1) * L(2, 1, 1) == L(1, 1, 2, 1)

    def test_units(self):
        assert L(5, -1).is_unit()
        assert not L(0, 2).is_unit()
        assert not L(0, 1, 1).is_unit()
        assert LaurentPoly.t_power(QQ, -3, Fraction(2, 7)).is_unit()

    def test_coefficient_lookup(self):
        f = L(-1, 2, 0, 5)
        assert f.coefficient(-1) == 2
        assert f.coefficient(1) == 5
        assert f.coefficient(0) == 0
        assert f.coefficient(99) == 0

    def test_min_max_exp(self):
        f = L(-2, 1, 0, 0, 7)
        assert f.min_exp == -2 and f.max_exp == 1


class TestNormalize:
    def test_zz_example(self):
        # [DERIVED] -6t^-1 + 6t = -6 t^-1 (1 - t^2); primitive part t^2 - 1
        f = L(-1, -6, 0, 6)
        cof, prim = laurent_normalize(f)
        assert prim == P(-1, 0, 1)
        assert cof * LaurentPoly.from_poly(prim.to_ring(ZZ)) == f

    def test_field_example(self):
        f = LaurentPoly(QQ, -2, Poly(QQ, (Fraction(1, 2), 0, Fraction(3, 2))))
        cof, prim = laurent_normalize(f)
        assert prim.is_monic()
        assert cof * LaurentPoly.from_poly(prim) == f

    def test_zero(self):
        cof, prim = laurent_normalize(LaurentPoly.zero(ZZ))
        assert prim.is_zero and cof == LaurentPoly.one(ZZ)

    def test_canonical_associate(self):
        assert canonical_associate(L(3, -2, 0, 2)) == P(-1, 0, 1)


small_laurents = st.builds(
    lambda v, cs: LaurentPoly(ZZ, v, Poly(ZZ, cs)),
    st.integers(-3, 3),
    st.lists(st.integers(-5, 5), min_size=0, max_size=4))


@settings(max_examples=150, deadline=None)
@given(small_laurents)
def test_normalize_reconstructs(f):
    cof, prim = laurent_normalize(f)
    assert cof * LaurentPoly.from_poly(prim) == f
    if not f.is_zero:
        assert prim.content() == 1 and prim.leading > 0 and prim.constant != 0


@settings(max_examples=150, deadline=None)
@given(small_laurents, small_laurents)
def test_canonical_associate_multiplicative(f, g):
    lhs = canonical_associate(f * g)
    rhs = canonical_associate(f) * canonical_associate(g)
    assert lhs == rhs


@settings(max_examples=150, deadline=None)
@given(small_laurents)
def test_normalize_idempotent(f):
    _, prim = laurent_normalize(f)
    again = laurent_normalize(LaurentPoly.from_poly(prim))[1]
    assert again == prim
