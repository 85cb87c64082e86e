"""Tests for evaluating V_m, its bounds, averages and Fourier transform."""

import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from src.core.errors import DomainError, NonConvergenceError
from src.kernel.quadrature import QuadratureSpec
from src.potential import (
    G_k_m,
    PotentialIndex,
    RatioBoundParams,
    Strategy,
    bracket,
    fourier_v,
    fourier_v0_closed,
    fourier_v_direct,
    g_k,
    large_x_bracket,
    ratio_bounds,
    v,
    v_asymptotic,
    v_at_zero,
    v_at_zero_stirling,
    v_av,
    v_av_derivative,
    v_av_identity,
    v_av_values,
    v_closed_m0,
    v_derivative,
    v_iterated,
    v_quadrature,
    v_recursion,
    v_recursion_chain,
    v_value,
    v_values,
    x_switch,
)

SQRT_PI = math.sqrt(math.pi)


def v0_oracle(x: float) -> float:
    return SQRT_PI * special.erfcx(x)


def v1_oracle(x: float) -> float:
    return (0.5 - x * x) * v0_oracle(x) + x


class TestPotentialIndex:
    def test_coulomb_sentinel(self):
        assert PotentialIndex(-1).is_coulomb
        assert not PotentialIndex(0).is_coulomb

    @pytest.mark.parametrize("m", [-1.5, math.nan, math.inf])
    def test_rejects_invalid(self, m):
        with pytest.raises(DomainError):
            PotentialIndex(m)

    def test_integer_flag(self):
        assert PotentialIndex(3.0).is_integer
        assert not PotentialIndex(2.5).is_integer


class TestEvaluation:
    def test_coulomb(self):
        result = v(-1, 2.0)
        assert result.value == 0.5
        assert result.strategy is Strategy.COULOMB

    def test_origin_m0(self):
        result = v(0, 0.0)
        assert result.value == pytest.approx(SQRT_PI, rel=1e-15)
        assert result.strategy is Strategy.ORIGIN

    def test_m0_at_one(self):
        assert v_value(0, 1.0) == pytest.approx(0.75787215614131, rel=1e-12)

    def test_m1_at_two(self):
        assert v_value(1, 2.0) == pytest.approx(v1_oracle(2.0), rel=1e-10)
        assert v_value(1, 2.0) == pytest.approx(0.41563, abs=1e-5)

    @pytest.mark.parametrize("m", [-1.0, -0.75, -0.5])
    def test_divergent_origin(self, m):
        with pytest.raises(DomainError):
            v(m, 0.0)

    def test_negative_x_rejected(self):
        with pytest.raises(DomainError):
            v(0, -1.0)

    def test_order_below_sentinel(self):
        with pytest.raises(DomainError):
            v(-2, 1.0)

    def test_negative_order_by_quadrature(self):
        # V_{-1/2} lies between 1/x and V_0
        value = v_value(-0.5, 1.0)
        assert v_value(0, 1.0) < value < 1.0

    @pytest.mark.parametrize("x", [1e-3, 0.1, 1.0, 3.0, 7.0])
    def test_quadrature_matches_closed_form(self, x):
        assert v_quadrature(0.0, x).value == pytest.approx(v0_oracle(x), rel=1e-11)

    @pytest.mark.parametrize("x", [0.01, 0.5, 2.0, 5.0])
    def test_quadrature_matches_m1_oracle(self, x):
        assert v_quadrature(1.0, x).value == pytest.approx(v1_oracle(x), rel=1e-10)

    @pytest.mark.parametrize("m", [1.0, 2.5])
    def test_tiny_x_underflowing_square(self, m):
        # x^2 underflows to zero
        assert v(m, 1e-170).value == pytest.approx(v_at_zero(m), rel=1e-10)
        assert v_quadrature(m, 1e-300).value == pytest.approx(v_at_zero(m), rel=1e-10)

    def test_auto_ignores_loose_tolerance(self):
        loose = v(2.5, 1.0, spec=QuadratureSpec(rel_tol=1e-4))
        assert loose.value == pytest.approx(v_quadrature(2.5, 1.0).value, rel=1e-10)

    def test_auto_uses_asymptotics_far_out(self):
        result = v(2.0, 100.0)
        assert result.strategy is Strategy.ASYMPTOTIC
        assert result.value == pytest.approx(v_quadrature(2.0, 100.0).value, rel=1e-10)

    def test_auto_uses_quadrature_inside_switch(self):
        assert v(2.5, 1.0).strategy is Strategy.QUADRATURE
        assert x_switch(0.0) == pytest.approx(math.sqrt(50.0))

    def test_closed_form_only_for_m0(self):
        with pytest.raises(DomainError):
            v(1, 1.0, Strategy.CLOSED_M0)

    def test_origin_strategy_only_at_origin(self):
        with pytest.raises(DomainError):
            v(1, 1.0, "origin")
        assert v(1, 0.0, "origin").value == pytest.approx(SQRT_PI / 2.0, rel=1e-15)

    def test_asymptotic_strategy_refuses_small_x(self):
        with pytest.raises(NonConvergenceError):
            v(3, 1.0, Strategy.ASYMPTOTIC)

    @pytest.mark.parametrize("method", ["quadrature", "recursion", "polynomial"])
    def test_strategies_agree(self, method):
        assert v(3, 0.8, method).value == pytest.approx(v(3, 0.8, "quadrature").value, rel=1e-9)

    def test_values_vectorized_and_even(self):
        xs = [-2.0, -0.5, 0.0, 0.5, 2.0]
        values = v_values(1.0, xs)
        assert values[0] == values[-1]
        assert values[2] == pytest.approx(SQRT_PI / 2.0, rel=1e-14)
        assert list(v_values(0.0, [1.0])) == pytest.approx([v0_oracle(1.0)], rel=1e-15)

    def test_values_coulomb_rejects_origin(self):
        with pytest.raises(DomainError):
            v_values(-1.0, [0.0, 1.0])


class TestOriginValues:
    def test_small_orders(self):
        assert v_at_zero(0) == pytest.approx(SQRT_PI, rel=1e-15)
        assert v_at_zero(1) == pytest.approx(SQRT_PI / 2.0, rel=1e-14)

    def test_large_order_stirling(self):
        assert v_at_zero(100) == pytest.approx(0.1, rel=1e-2)
        assert v_at_zero_stirling(100) == pytest.approx(v_at_zero(100), rel=1e-3)

    @pytest.mark.parametrize("m", [0.5 * i for i in range(1, 41)])
    def test_matches_gamma_ratio(self, m):
        expected = special.gamma(m + 0.5) / special.gamma(m + 1.0)
        assert v_at_zero(m) == pytest.approx(expected, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            v_at_zero(-0.5)

    def test_closed_m0(self):
        assert v_closed_m0(0.0) == pytest.approx(SQRT_PI, rel=1e-15)
        assert v_closed_m0(50.0) == pytest.approx(1 / 50 - 1 / (2 * 50**3), rel=1e-6)


class TestRecursions:
    def test_single_step(self):
        assert v_recursion(1, 2.0, (v0_oracle(2.0), 0.5)) == pytest.approx(v1_oracle(2.0), rel=1e-13)

    def test_single_step_near_origin(self):
        x = 1e-6
        value = v_recursion(1, x, (v0_oracle(x), 1.0 / x))
        assert value == pytest.approx(SQRT_PI / 2.0, rel=1e-5)

    def test_step_domain(self):
        with pytest.raises(DomainError):
            v_recursion(0.5, 1.0, (1.0, 1.0))
        with pytest.raises(DomainError):
            v_recursion(1, 0.0, (1.0, 1.0))

    def test_chain_matches_quadrature(self):
        chain = v_recursion_chain(2, 1.0)
        assert chain.value == pytest.approx(v_quadrature(2.0, 1.0).value, rel=1e-10)
        assert chain.diagnostics["steps"] == 2

    def test_chain_real_order(self):
        assert v_recursion_chain(2.5, 1.0).value == pytest.approx(v_quadrature(2.5, 1.0).value, rel=1e-9)

    def test_iterated(self):
        assert v_iterated(1, 2.0) == pytest.approx(0.5 * (-7.0 * v0_oracle(2.0) + 4.0), rel=1e-13)
        assert v_iterated(2, 1.0) == pytest.approx(v_recursion_chain(2, 1.0).value, rel=1e-12)
        low, high = bracket(3, 0.1)
        assert low < v_iterated(3, 0.1) < high

    def test_iterated_needs_integer(self):
        with pytest.raises(DomainError):
            v_iterated(1.5, 1.0)


class TestDerivative:
    def test_origin(self):
        assert v_derivative(1, 0.0) == 0.0
        assert v_derivative(0, 0.0) == -2.0

    def test_m0_at_one(self):
        assert v_derivative(0, 1.0) == pytest.approx(2.0 * (v0_oracle(1.0) - 1.0), rel=1e-12)

    @given(st.sampled_from([0.0, 0.5, 1.0, 2.0, 5.0]), st.floats(0.01, 10.0))
    @settings(max_examples=25, deadline=None)
    def test_matches_central_difference(self, m, x):
        h = 1e-4
        numeric = (v_value(m, x + h) - v_value(m, x - h)) / (2 * h)
        assert abs(v_derivative(m, x) - numeric) <= 1e-6


class TestAsymptotics:
    def test_leading_term(self):
        assert v_asymptotic(3.0, 20.0, 0).value == pytest.approx(1 / 20.0, rel=1e-15)

    def test_printed_coefficients(self):
        result = v_asymptotic(0.0, 10.0, 2)
        assert result.value == pytest.approx(0.1 - 0.0005 + 0.0000075, rel=1e-14)

    def test_error_against_quadrature(self):
        m, x = 1.0, 10.0
        difference = abs(v_asymptotic(m, x, 1).value - v_quadrature(m, x).value)
        assert difference < 2 * 3 * (m + 2) * (m + 1) / (8 * x**5)

    def test_outside_validity(self):
        with pytest.raises(NonConvergenceError):
            v_asymptotic(5.0, 2.0, 3)


class TestBounds:
    def test_bracket_examples(self):
        assert bracket(1, 0.0) == pytest.approx((1 / math.sqrt(2), 1.0))
        assert bracket(4, 3.0) == pytest.approx((1 / math.sqrt(14), 1 / math.sqrt(13)))
        assert bracket(0, 1.0)[1] == math.inf

    @given(st.floats(0.05, 20.0), st.floats(0.0, 30.0))
    @settings(max_examples=30, deadline=None)
    def test_bracket_contains_value(self, m, x):
        low, high = bracket(m, x)
        assert low < v_value(m, x) < high

    @given(st.floats(0.0, 10.0), st.floats(0.05, 10.0))
    @settings(max_examples=30, deadline=None)
    def test_decreasing_in_m(self, m, x):
        assert v_value(m + 1.0, x) < v_value(m, x) < 1.0 / x

    @given(st.floats(5.0, 100.0), st.integers(0, 10))
    @settings(max_examples=30, deadline=None)
    def test_large_x_bracket(self, x, m):
        low, high = large_x_bracket(m, x)
        gap = 1.0 / x - v_value(m, x)
        assert low - 1e-12 <= gap < high

    def test_g_k_endpoints(self):
        assert g_k(0.0, math.pi) == pytest.approx(SQRT_PI, rel=1e-15)
        assert g_k(0.0, 4.0) == 2.0

    @given(st.floats(1e-3, 10.0))
    @settings(max_examples=40, deadline=None)
    def test_g_k_brackets_v0(self, x):
        assert g_k(x, math.pi) <= v0_oracle(x) * (1 + 1e-12)
        assert v0_oracle(x) < g_k(x, 4.0)

    def test_G_limit_at_origin(self):
        for m in (1, 2, 5):
            assert G_k_m(0.0, 4.0, m) == pytest.approx(2 * m / (2 * m + 1))
            assert G_k_m(1e-12, 4.0, m) == pytest.approx(2 * m / (2 * m + 1), rel=1e-6)
            assert (2 * m - 1) / (2 * m) < 2 * m / (2 * m + 1)

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    @pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 3.0, 10.0])
    def test_ratio_bounds(self, m, x):
        low, high = ratio_bounds(m, x)
        ratio = v_value(m, x) / v_value(m - 1, x)
        assert low < ratio < high

    def test_ratio_params(self):
        assert RatioBoundParams(4.0, 2.0)(1.0) == G_k_m(1.0, 4.0, 2.0)
        with pytest.raises(DomainError):
            RatioBoundParams(1.0, 0.0)


class TestAveraged:
    def test_single_term(self):
        assert v_av(1, 0.7) == pytest.approx(v0_oracle(0.7), rel=1e-14)

    def test_origin(self):
        expected = sum(v_at_zero(m) for m in range(4)) / 4
        assert v_av(4, 0.0) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("N", [1, 2, 3, 5])
    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0])
    def test_identity(self, N, x):
        value, scale = v_av_identity(N, x)
        assert abs(value - v_av(N, x)) <= 1e-10 * scale

    def test_two_terms(self):
        value, _ = v_av_identity(2, 1.0)
        assert value == pytest.approx((v0_oracle(1.0) + v1_oracle(1.0)) / 2, rel=1e-10)

    def test_cusp_slope(self):
        assert v_av_derivative(4, 0.0) == -0.5
        h = 1e-6
        slope = (v_av(4, h) - v_av(4, 0.0)) / h
        assert slope == pytest.approx(-0.5, abs=1e-5)

    def test_values(self):
        xs = [-1.0, 0.0, 1.0]
        values = v_av_values(3, xs)
        assert values[0] == values[2]
        assert values[1] == pytest.approx(v_av(3, 0.0), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            v_av(0, 1.0)


class TestFourier:
    @pytest.mark.parametrize("xi", [0.5, 1.0, 2.0, 5.0])
    def test_m0_closed_form(self, xi):
        expected = math.exp(xi * xi / 4) * special.exp1(xi * xi / 4) / math.sqrt(2 * math.pi)
        assert fourier_v0_closed(xi) == pytest.approx(expected, rel=1e-13)
        assert fourier_v(0, xi) == pytest.approx(expected, rel=1e-10)

    def test_m0_at_two(self):
        expected = math.e * special.exp1(1.0) / math.sqrt(2 * math.pi)
        assert expected == pytest.approx(0.2379082, rel=1e-6)
        assert fourier_v(0, 2.0) == pytest.approx(expected, rel=1e-10)

    def test_even_and_positive(self):
        assert fourier_v(1.5, -1.3) == pytest.approx(fourier_v(1.5, 1.3), rel=1e-14)
        assert fourier_v(1.5, 1.3) > 0

    def test_origin_is_singular(self):
        with pytest.raises(DomainError):
            fourier_v(0, 0.0)

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_direct_transform(self, m):
        assert fourier_v_direct(m, 1.0) == pytest.approx(fourier_v(m, 1.0), abs=1e-6)

    def test_direct_needs_finite_origin(self):
        with pytest.raises(DomainError):
            fourier_v_direct(-0.75, 1.0)

    @given(st.floats(0.0, 8.0), st.floats(0.2, 6.0))
    @settings(max_examples=20, deadline=None)
    def test_decreasing_in_xi(self, m, xi):
        assert fourier_v(m, xi * 1.1) < fourier_v(m, xi)
