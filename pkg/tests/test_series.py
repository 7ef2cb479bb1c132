from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankelcert.scalar import GaussianRational, I
from hankelcert.series import (
    TruncatedSeries,
    compose,
    derivative,
    divide,
    divide_by_z,
    integrate_from_zero,
    linear_combine,
    multiply,
    series,
    series_exp,
)

from oracles import ps_exp_taylor

Z = TruncatedSeries.monomial(1, 6)


def S(*coeffs, order=None):
    return series(coeffs, order)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def random_series(draw, order=5, zero_constant=False):
    cs = draw(st.lists(rationals, min_size=order + 1, max_size=order + 1))
    if zero_constant:
        cs[0] = F(0)
    return TruncatedSeries(order, tuple(cs))


class TestConstruction:
    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries(3, (1, 2))

    def test_negative_order(self):
        with pytest.raises(ValueError):
            TruncatedSeries(-1, ())

    def test_unknown_coefficient(self):
        with pytest.raises(IndexError):
            S(1, 2)[2]

    def test_from_coeffs_pads(self):
        assert S(1, 1, order=4).coeffs == (1, 1, 0, 0, 0)

    def test_str(self):
        assert str(S(0, 1, 0, F(1, 6))) == "z + (1/6)*z^3 + O(z^4)"
        assert str(TruncatedSeries.constant(0, 2)) == "0 + O(z^3)"

    def test_json_round_trip(self):
        s = S(1, F(-2, 3), GaussianRational(1, 2))
        assert TruncatedSeries.from_json(s.to_json()) == s

    def test_json_malformed(self):
        with pytest.raises(ValueError):
            TruncatedSeries.from_json({"coeffs": []})


class TestLinearCombine:
    def test_sum(self):
        assert linear_combine(1, S(0, 1, 0), 1, S(0, 0, 1)) == S(0, 1, 1)

    def test_difference(self):
        assert linear_combine(2, S(1, 1), -2, S(1, 0)) == S(0, 2)

    def test_phi_minus_one(self):
        phi = S(1, 1, F(1, 4))
        assert linear_combine(1, phi, -1, S(1, order=2)) == S(0, 1, F(1, 4))

    def test_order_is_minimum(self):
        assert (S(1, 1, 1) + S(1, 1)).order == 1


class TestMultiply:
    def test_square_gives_phi(self):
        h = S(1, F(1, 2), order=2)
        assert multiply(h, h) == S(1, 1, F(1, 4))

    def test_identity(self):
        s = S(3, F(1, 7), -2)
        assert multiply(s, S(1, order=2)) == s

    def test_difference_of_squares(self):
        assert multiply(S(1, 1, order=2), S(1, -1, order=2)) == S(1, 0, -1)

    def test_gaussian(self):
        assert multiply(S(I, order=1), S(I, order=1)) == S(-1, order=1)

    @settings(max_examples=40, deadline=None)
    @given(random_series(), random_series(), random_series())
    def test_ring_axioms(self, a, b, c):
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)
        assert multiply(a, b) == multiply(b, a)


class TestCompose:
    phi = S(1, 1, F(1, 4), order=8)

    def test_phi_of_z2(self):
        assert compose(self.phi, TruncatedSeries.monomial(2, 8)) == S(1, 0, 1, 0, F(1, 4), order=8)

    def test_phi_of_z3(self):
        assert compose(self.phi, TruncatedSeries.monomial(3, 8)) == S(1, 0, 0, 1, 0, 0, F(1, 4), order=8)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError, match="composition requires vanishing constant term"):
            compose(self.phi, S(1, 1))

    @settings(max_examples=30, deadline=None)
    @given(random_series(order=6))
    def test_identity_inner(self, s):
        assert compose(s, TruncatedSeries.monomial(1, 6)) == s

    def test_order_tracks_valuation(self):
        # z^2 known through z^3 determines outer(z^2) through z^(2*(order+1) - 1)
        out = compose(S(1, 1, 1), S(0, 0, 1, 0, order=9))
        assert out.order == 5
        assert out == S(1, 0, 1, 0, 1, 0)


class TestExp:
    def test_exp_z(self):
        assert series_exp(S(0, 1, order=3)) == S(1, 1, F(1, 2), F(1, 6))

    def test_frozen_value(self):
        # brute-force Taylor expansion of exp(z + z^2/8), frozen
        assert series_exp(S(0, 1, F(1, 8), order=4)) == S(1, 1, F(5, 8), F(7, 24), F(43, 384))

    def test_exp_zero(self):
        assert series_exp(S(0, order=4)) == S(1, order=4)

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            series_exp(S(1, 1))

    @settings(max_examples=30, deadline=None)
    @given(random_series(order=5, zero_constant=True))
    def test_against_taylor_oracle(self, s):
        assert list(series_exp(s).coeffs) == ps_exp_taylor(list(s.coeffs), 5)

    @settings(max_examples=30, deadline=None)
    @given(random_series(order=6, zero_constant=True))
    def test_log_derivative_round_trip(self, s):
        e = series_exp(s)
        de = derivative(e)
        assert divide(de, e.truncate(de.order)) == derivative(s)


class TestIntegrate:
    def test_one(self):
        assert integrate_from_zero(S(1, order=0)) == S(0, 1)

    def test_power_rule(self):
        assert integrate_from_zero(S(0, 1, F(1, 4))) == S(0, 0, F(1, 2), F(1, 12))

    def test_frozen(self):
        assert integrate_from_zero(S(0, 0, F(1, 2), 0, F(1, 16))) == S(0, 0, 0, F(1, 6), 0, F(1, 80))


class TestDivide:
    def test_frozen(self):
        assert divide(S(0, 2, 0), S(2, 2, 0)) == S(0, 1, -1)

    def test_by_one(self):
        s = S(F(1, 3), 4, -1)
        assert divide(s, S(1, order=2)) == s

    def test_cayley_recovers_z(self):
        p = S(1, 2, 2, 2)
        assert divide(p - 1, p + 1) == S(0, 1, 0, 0)

    def test_zero_constant(self):
        with pytest.raises(ZeroDivisionError, match="division by series with zero constant term"):
            divide(S(1, 1), S(0, 1))

    @settings(max_examples=40, deadline=None)
    @given(random_series(), random_series())
    def test_round_trip(self, s, t):
        if t[0] == 0:
            t = t + 1
        assert multiply(divide(s, t), t) == s


class TestDivideByZ:
    def test_examples(self):
        assert divide_by_z(S(0, 1)) == S(1, order=0)
        assert divide_by_z(S(0, 0, 1, 0, F(1, 4))) == S(0, 1, 0, F(1, 4))
        assert divide_by_z(S(0, 0, 0, F(1, 3))) == S(0, 0, F(1, 3))

    def test_singular(self):
        with pytest.raises(ValueError):
            divide_by_z(S(1, 1))
