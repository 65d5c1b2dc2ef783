"""Function families: series coefficients, adaptive values, and the sine zero."""

import random
from fractions import Fraction as F

import pytest

from lucascalc import (
    Backend,
    DivisionByZeroValue,
    FnKind,
    NegativeNormalizer,
    NoRootFound,
    PoleAtOrigin,
    SERIES_KINDS,
    SeriesDiverging,
    TruncatedSeries,
    binom2,
    binomial_series2,
    binomial_value,
    deformed_power_value,
    deformed_zero_series,
    deformed_zero_value,
    find_pi_u,
    fn_series,
    fn_value,
    fn_value_info,
    lucastorial,
    make_params,
    multinomial_number,
    multinomial_series,
    multinomial_value,
    outer,
    params_from_roots,
    tilde_value,
)

EXP, SIN, COS, TAN, COT = FnKind.EXP, FnKind.SIN, FnKind.COS, FnKind.TAN, FnKind.COT
SEC, CSC, SINH, COSH = FnKind.SEC, FnKind.CSC, FnKind.SINH, FnKind.COSH

FIB = make_params(F(1), F(1))


class TestSeries:
    def test_exp_constant_term(self):
        for u in (F(3), F(0), F(-2, 5)):
            assert fn_series(EXP, u, FIB, 6).coeffs[0] == 1

    def test_exp_cubic_coefficient(self):
        u = F(4, 7)
        s = fn_series(EXP, u, FIB, 6)
        assert s.coeffs[3] == u**3 / 2  # weight exponent T(3) = 3, {3}! = 2

    def test_exp_zero_deformation_limit(self):
        s = fn_series(EXP, F(0), FIB, 6)
        assert s == TruncatedSeries.from_terms({0: F(1), 1: F(1)}, 6, Backend.RATIONAL)

    def test_trig_zero_deformation_limits(self):
        zero, one = F(0), F(1)
        assert fn_series(SIN, zero, FIB, 6) == TruncatedSeries.from_terms({1: one}, 6, Backend.RATIONAL)
        assert fn_series(COS, zero, FIB, 6) == TruncatedSeries.constant(one, 6)
        assert fn_series(TAN, zero, FIB, 6) == TruncatedSeries.from_terms({1: one}, 6, Backend.RATIONAL)
        assert fn_series(SINH, zero, FIB, 6) == TruncatedSeries.from_terms({1: one}, 6, Backend.RATIONAL)
        assert fn_series(COSH, zero, FIB, 6) == TruncatedSeries.constant(one, 6)

    def test_general_coefficients(self):
        u = F(2, 3)
        s = fn_series(SIN, u, FIB, 9)
        for j in range(5):
            m = 2 * j + 1
            if m > 9:
                break
            expect = (-1) ** j * u ** binom2(m) / lucastorial(m, FIB)
            assert s.coeffs[m] == expect
        assert all(s.coeffs[m] == 0 for m in range(0, 10, 2))

    def test_tan_is_sin_times_sec(self):
        u = F(1, 2)
        tan = fn_series(TAN, u, FIB, 10)
        sin = fn_series(SIN, u, FIB, 10)
        sec = fn_series(SEC, u, FIB, 10)
        assert tan == sin * sec

    def test_pole_kinds_have_no_series(self):
        for kind in (COT, CSC, FnKind.COTH, FnKind.CSCH):
            assert kind not in SERIES_KINDS
            with pytest.raises(PoleAtOrigin):
                fn_series(kind, F(1), FIB, 6)


class TestValues:
    def test_sin_cos_at_origin(self):
        p = make_params(1.0, 1.0)
        assert fn_value(SIN, 0.0, 1.0, p) == 0.0
        assert fn_value(COS, 0.0, 1.0, p) == 1.0

    def test_exp_matches_50_term_exact_oracle(self):
        total = F(0)
        for n in range(51):
            total += F(1) / lucastorial(n, FIB)
        p = make_params(1.0, 1.0)
        info = fn_value_info(EXP, 1.0, 1.0, p)
        assert info.value == pytest.approx(float(total), rel=1e-12)
        assert info.terms_used < 40

    def test_values_match_high_order_series(self):
        rng = random.Random(3)
        p = make_params(1.0, 1.0)
        exact = fn_series(EXP, F(1, 2), FIB, 40)
        for _ in range(10):
            x = rng.uniform(-1.0, 1.0)
            expect = sum(float(c) * x**n for n, c in enumerate(exact.coeffs))
            assert fn_value(EXP, x, 0.5, p) == pytest.approx(expect, rel=1e-11)

    def test_pole_kind_at_origin(self):
        p = make_params(1.0, 1.0)
        with pytest.raises(DivisionByZeroValue):
            fn_value(COT, 0.0, 1.0, p)

    def test_divergence_detected(self):
        p = make_params(1.0, 1.0)
        with pytest.raises(SeriesDiverging):
            fn_value(EXP, 2.0, 4.0, p)

    def test_exact_value_evaluation(self):
        # adaptive summation terminates on exact backends too
        value = fn_value(EXP, F(1, 3), F(1, 2), FIB, eps=1e-15)
        series = fn_series(EXP, F(1, 2), FIB, 30)
        assert float(value) == pytest.approx(float(series.eval_at(F(1, 3))), rel=1e-13)


class TestBivariate:
    def test_exp_bivariate_equals_outer_product(self):
        u, v = F(2, 3), F(-1, 2)
        lhs = binomial_series2(EXP, u, v, FIB, 8)
        rhs = outer(fn_series(EXP, u, FIB, 8), fn_series(EXP, v, FIB, 8))
        assert lhs == rhs

    def test_constant_coefficient(self):
        assert binomial_series2(EXP, F(1), F(1), FIB, 6).coefficient(0, 0) == 1
        assert binomial_series2(SIN, F(1), F(1), FIB, 6).coefficient(0, 0) == 0

    def test_bivariate_value_matches_series(self):
        p = make_params(1.0, 1.0)
        u, v = 0.5, 0.75
        series = binomial_series2(EXP, F(1, 2), F(3, 4), FIB, 20)
        x, y = 0.3, -0.2
        expect = sum(float(c) * x**j * y**k for (j, k), c in series.coeffs.items())
        assert binomial_value(EXP, x, y, u, v, p) == pytest.approx(expect, rel=1e-10)

    def test_bivariate_weights_are_deformed_powers(self):
        # degree-n slice of the exp combination is the deformed power over {n}!
        u, v = F(1, 2), F(2)
        S = binomial_series2(EXP, u, v, FIB, 6)
        x, y = F(2, 3), F(-1, 3)
        for n in range(7):
            slice_value = sum(
                S.coefficient(j, n - j) * x**j * y ** (n - j) for j in range(n + 1)
            )
            expect = deformed_power_value(n, x, y, u, v, FIB) / lucastorial(n, FIB)
            assert slice_value == expect


class TestMultinomial:
    def test_single_weight_reduces_to_plain(self):
        p = make_params(1.0, 1.0)
        x = 0.4
        assert multinomial_value(EXP, (0.5,), x, p) == pytest.approx(
            fn_value(EXP, x, 0.5, p), rel=1e-12
        )

    def test_cos_multinomial_at_origin(self):
        p = make_params(1.0, 1.0)
        assert multinomial_value(COS, (0.5, 0.25), 0.0, p) == 1.0

    def test_series_coefficients_are_multinomial_numbers(self):
        us = (F(1, 2), F(3))
        S = multinomial_series(SIN, us, FIB, 9)
        for j in range(4):
            m = 2 * j + 1
            expect = (-1) ** j * multinomial_number(us, m, FIB) / lucastorial(m, FIB)
            assert S.coeffs[m] == expect


class TestDeformedZeroSeries:
    def test_cos_kind_at_origin(self):
        p = make_params(1.0, 1.0)
        assert deformed_zero_value(COS, 0.5, 0.75, 0.0, p) == 1.0

    def test_sin_kind_vanishes_at_roots(self):
        p = params_from_roots(2.0, -1.0)
        for x in (0.1, 0.4, 0.9):
            assert deformed_zero_value(SIN, 2.0, -1.0, x, p) == pytest.approx(0.0, abs=1e-14)

    def test_pythagorean_value_oracle(self):
        p = make_params(1.0, 1.0)
        x = 0.4
        lhs = fn_value(SIN, x, 1.0, p) ** 2 + fn_value(COS, x, 1.0, p) ** 2
        rhs = deformed_zero_value(COS, 1.0, 1.0, x, p)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_exact_series_matches_weights(self):
        u, v = F(1, 3), F(-2)
        S = deformed_zero_series(COS, u, v, FIB, 8)
        from lucascalc import deformed_zero

        for j in range(5):
            m = 2 * j
            expect = (-1) ** j * deformed_zero(m, u, v, FIB) / lucastorial(m, FIB)
            assert S.coeffs[m] == expect


class TestTilde:
    def test_values_at_origin(self):
        p = make_params(1.0, 1.0)
        assert tilde_value(COS, 0.0, 1.0, p) == 1.0
        assert tilde_value(SIN, 0.0, 1.0, p) == 0.0

    @pytest.mark.parametrize("s,t,u", [(1.0, 1.0, 1.0), (1.0, 1.0, 0.5), (2.0, 1.0, 1 / 3)])
    def test_unit_circle(self, s, t, u):
        p = make_params(s, t)
        for x in (-0.5, -0.2, 0.1, 0.3, 0.5):
            total = tilde_value(SIN, x, u, p) ** 2 + tilde_value(COS, x, u, p) ** 2
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_secant_form(self):
        p = make_params(1.0, 1.0)
        x, u = 0.3, 0.5
        assert tilde_value(TAN, x, u, p) ** 2 + 1.0 == pytest.approx(
            tilde_value(SEC, x, u, p) ** 2, rel=1e-10
        )

    def test_rejects_exact_backend(self):
        with pytest.raises(NegativeNormalizer):
            tilde_value(SIN, F(1, 4), F(1), FIB)


class TestPiU:
    def test_fibonacci_unit_root(self):
        p = make_params(1.0, 1.0)
        root = find_pi_u(p, 1.0)
        assert 1.5 < root.value < 1.6
        assert root.residual < 1e-10

    def test_pell_root(self):
        p = make_params(2.0, 1.0)
        root = find_pi_u(p, 1.0)
        assert root.value > 0
        assert root.residual < 1e-10

    def test_no_root_when_series_diverges(self):
        p = make_params(1.0, 1.0)
        with pytest.raises(NoRootFound):
            find_pi_u(p, 3.0)

    def test_leftmost_root_wins(self):
        p = make_params(1.0, 1.0)
        root = find_pi_u(p, 1.0)
        # no sign change on a finer grid before the reported root
        prev = None
        x = 0.01
        while x < root.value - 1e-6:
            val = fn_value(SIN, x, 1.0, p)
            if prev is not None:
                assert (val < 0) == (prev < 0)
            prev = val
            x += 0.01


class TestParitySeries:
    def test_odd_even_structure(self):
        u = F(3, 4)
        sin = fn_series(SIN, u, FIB, 11)
        cos = fn_series(COS, u, FIB, 11)
        tan = fn_series(TAN, u, FIB, 11)
        sec = fn_series(SEC, u, FIB, 11)
        assert all(sin.coeffs[m] == 0 for m in range(0, 12, 2))
        assert all(cos.coeffs[m] == 0 for m in range(1, 12, 2))
        assert all(tan.coeffs[m] == 0 for m in range(0, 12, 2))
        assert all(sec.coeffs[m] == 0 for m in range(1, 12, 2))
