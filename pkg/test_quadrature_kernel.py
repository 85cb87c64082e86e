"""Tests for the quadrature kernel and the special-function wrappers."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import DomainError
from src.kernel import (
    IntegrationResult,
    LaguerreWeight,
    QuadratureSpec,
    betafn,
    erfcx,
    exp_integral_e1,
    gammafn,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
    kummer_terminating,
    kummer_terminating_terms,
    log_gammafn,
    truncation_point,
)


class TestQuadratureSpec:
    def test_defaults_are_valid(self):
        spec = QuadratureSpec()
        assert spec.rel_tol > 0 and spec.abs_tol >= 0

    @pytest.mark.parametrize(
        "kwargs",
        [{"rel_tol": 0.0}, {"abs_tol": -1.0}, {"max_subdivisions": 0}, {"rule_order": 1}],
    )
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(DomainError):
            QuadratureSpec(**kwargs)

    def test_tolerance_for_uses_larger_of_both(self):
        spec = QuadratureSpec(rel_tol=1e-6, abs_tol=1e-10)
        assert spec.tolerance_for(1.0) == pytest.approx(1e-6)
        assert spec.tolerance_for(0.0) == pytest.approx(1e-10)

    def test_zero_abs_tol_raises_quadpack_floor(self):
        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=0.0)
        assert spec.quadpack_rel_tol > spec.rel_tol
        assert QuadratureSpec(rel_tol=1e-15, abs_tol=1e-20).quadpack_rel_tol == 1e-15
        assert QuadratureSpec(rel_tol=1e-6, abs_tol=0.0).quadpack_rel_tol == 1e-6

    def test_laguerre_weight_domain(self):
        with pytest.raises(DomainError):
            LaguerreWeight(-1.0)
        assert LaguerreWeight(-0.5).alpha == -0.5


class TestFiniteIntegration:
    def test_smooth_integrand(self):
        result = integrate_finite(math.sin, 0.0, math.pi)
        assert result.converged
        assert result.value == pytest.approx(2.0, rel=1e-12)
        assert result.error_estimate <= 1e-10

    def test_endpoint_log_singularity(self):
        result = integrate_finite(math.log, 0.0, 1.0)
        assert result.converged
        assert result.value == pytest.approx(-1.0, rel=1e-10)

    def test_break_points(self):
        result = integrate_finite(lambda x: abs(x - 0.3), 0.0, 1.0, points=[0.3])
        assert result.value == pytest.approx(0.5 * (0.3**2 + 0.7**2), rel=1e-12)

    def test_empty_interval_rejected(self):
        with pytest.raises(DomainError):
            integrate_finite(math.sin, 1.0, 1.0)

    def test_unreachable_tolerance_is_reported_not_hidden(self):
        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=0.0, max_subdivisions=1)
        result = integrate_finite(lambda x: math.sin(50.0 * x) / math.sqrt(x), 0.0, 10.0, spec)
        assert not result.converged
        assert "message" in result.diagnostics

    def test_zero_abs_tol_with_tiny_rel_tol(self):
        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=0.0)
        assert integrate_finite(math.sin, 0.0, math.pi, spec).value == pytest.approx(2.0, rel=1e-12)
        result = integrate_oscillatory(lambda x: 1.0, 0.0, 1.0, 2.0, spec)
        assert result.value == pytest.approx(math.sin(2.0) / 2.0, rel=1e-12)

    def test_inverse_square_root(self):
        result = integrate_finite(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
        assert result.converged
        assert result.value == pytest.approx(2.0, rel=1e-10)

    @pytest.mark.parametrize(
        "f, a, b, exact",
        [
            (math.sqrt, 0.0, 1.0, 2.0 / 3.0),
            (math.log, 0.0, 1.0, -1.0),
            (lambda x: 1.0 / (1.0 + 25.0 * x * x), -1.0, 1.0, 0.4 * math.atan(5.0)),
        ],
    )
    def test_tighter_tolerance_never_worse(self, f, a, b, exact):
        tolerances = (1e-3, 5e-4, 1e-6, 5e-7, 1e-9, 5e-10)
        errors = []
        for rel_tol in tolerances:
            spec = QuadratureSpec(rel_tol=rel_tol, abs_tol=0.0)
            errors.append(abs(integrate_finite(f, a, b, spec).value - exact))
        for rel_tol, looser, tighter in zip(tolerances[1:], errors, errors[1:]):
            # either no worse than before or inside the tighter request
            assert tighter <= max(looser, rel_tol * abs(exact), 1e-14)

    def test_results_add(self):
        left = integrate_finite(math.cos, 0.0, 1.0)
        right = integrate_finite(math.cos, 1.0, 2.0)
        total = left + right
        assert total.value == pytest.approx(math.sin(2.0), rel=1e-12)
        assert total.converged
        assert total.evaluations == left.evaluations + right.evaluations

    def test_sum_of_unconverged_is_unconverged(self):
        good = IntegrationResult(1.0, 0.0, 1, True)
        bad = IntegrationResult(1.0, 1.0, 1, False)
        assert not (good + bad).converged


class TestOscillatoryIntegration:
    def test_cosine_weight(self):
        result = integrate_oscillatory(lambda x: 1.0, 0.0, 1.0, 2.0)
        assert result.converged
        assert result.value == pytest.approx(math.sin(2.0) / 2.0, rel=1e-12)
        assert result.diagnostics["strategy"] == "oscillatory-cos"

    def test_sine_weight(self):
        result = integrate_oscillatory(lambda x: x, 0.0, math.pi, 1.0, kind="sin")
        assert result.value == pytest.approx(math.pi, rel=1e-12)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            integrate_oscillatory(lambda x: 1.0, 0.0, 1.0, 1.0, kind="tan")


class TestSemiInfiniteIntegration:
    def test_plain_decay(self):
        result = integrate_semi_infinite(lambda u: math.exp(-u))
        assert result.value == pytest.approx(1.0, rel=1e-12)
        assert result.diagnostics["truncation"] == math.inf

    def test_laguerre_hint_truncates(self):
        spec = QuadratureSpec()
        result = integrate_semi_infinite(lambda u: u * u * math.exp(-u), spec, LaguerreWeight(2.0))
        assert result.converged
        assert result.value == pytest.approx(2.0, rel=1e-12)
        upper = result.diagnostics["truncation"]
        assert upper**2 * math.exp(-upper) < spec.abs_tol
        assert result.diagnostics["tail_bound"] < 1e-10

    def test_lower_limit(self):
        result = integrate_semi_infinite(lambda u: math.exp(-u), lower=2.0, weight_hint=LaguerreWeight(0.0))
        assert result.value == pytest.approx(math.exp(-2.0), rel=1e-10)

    def test_gauss_laguerre_is_exact_for_polynomials(self):
        result = integrate_semi_infinite(lambda u: u**3 * math.exp(-u), method="laguerre")
        assert result.converged
        assert result.value == pytest.approx(6.0, rel=1e-12)
        assert result.diagnostics["strategy"] == "laguerre"

    def test_laguerre_and_adaptive_agree(self):
        spec = QuadratureSpec()
        adaptive = integrate_semi_infinite(lambda u: math.exp(-u) * math.cos(u), spec)
        rule = integrate_semi_infinite(lambda u: math.exp(-u) * math.cos(u), spec, method="laguerre")
        assert adaptive.value == pytest.approx(0.5, rel=1e-12)
        assert abs(adaptive.value - rule.value) <= 10 * spec.tolerance_for(0.5)

    def test_half_integer_weight(self):
        spec = QuadratureSpec()
        weight = LaguerreWeight(1.5)
        adaptive = integrate_semi_infinite(lambda u: u**1.5 * math.exp(-u), spec, weight)
        rule = integrate_semi_infinite(lambda u: u**1.5 * math.exp(-u), spec, weight, method="laguerre")
        assert adaptive.converged
        assert adaptive.value == pytest.approx(math.gamma(2.5), rel=1e-12)
        assert rule.value == pytest.approx(math.gamma(2.5), rel=1e-13)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            integrate_semi_infinite(math.exp, method="simpson")

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 3.0, 20.0])
    def test_truncation_point_bound(self, alpha):
        upper = truncation_point(alpha, 1e-14)
        assert upper > alpha
        assert alpha * math.log(upper) - upper < math.log(1e-14)


class TestSpecialFunctions:
    def test_gamma_half(self):
        assert gammafn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    @given(st.floats(min_value=0.5, max_value=30.0))
    @settings(max_examples=100, deadline=None)
    def test_gamma_recurrence(self, x):
        assert gammafn(x + 1.0) == pytest.approx(x * gammafn(x), rel=1e-12)

    @pytest.mark.parametrize("pole", [0.0, -1.0, -5.0])
    def test_gamma_poles(self, pole):
        with pytest.raises(DomainError):
            gammafn(pole)
        with pytest.raises(DomainError):
            log_gammafn(pole)

    def test_log_gamma_large(self):
        assert log_gammafn(200.5) == pytest.approx(math.lgamma(200.5), rel=1e-14)

    def test_beta_domain(self):
        with pytest.raises(DomainError):
            betafn(0.0, 1.0)

    @given(st.floats(0.1, 30.0), st.floats(0.1, 30.0))
    @settings(max_examples=50, deadline=None)
    def test_beta_matches_gamma_ratio(self, a, b):
        expected = math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
        assert betafn(a, b) == pytest.approx(expected, rel=1e-10)
        assert betafn(a, b) == pytest.approx(betafn(b, a), rel=1e-14)

    def test_erfcx(self):
        assert erfcx(0.0) == 1.0
        assert erfcx(1.0) == pytest.approx(math.exp(1.0) * math.erfc(1.0), rel=1e-14)
        # no overflow far out, where exp(x^2) alone would
        assert erfcx(1e3) == pytest.approx(1.0 / (1e3 * math.sqrt(math.pi)), rel=1e-6)
        with pytest.raises(DomainError):
            erfcx(-1.0)

    def test_exp_integral(self):
        assert exp_integral_e1(1.0) == pytest.approx(0.21938393439552029, rel=1e-14)
        with pytest.raises(DomainError):
            exp_integral_e1(0.0)

    def test_kummer_terminates(self):
        terms = kummer_terminating_terms(-2.0, 3.0, 0.5)
        assert len(terms) == 3
        expected = 1.0 - 2.0 * 0.5 / 3.0 + 0.25 / (3.0 * 4.0)
        assert kummer_terminating(-2.0, 3.0, 0.5) == pytest.approx(expected, rel=1e-15)

    def test_kummer_requires_terminating_series(self):
        with pytest.raises(DomainError):
            kummer_terminating_terms(-1.5, 1.0, 1.0)

    def test_kummer_vanishing_pochhammer(self):
        with pytest.raises(DomainError):
            kummer_terminating_terms(-3.0, -1.0, 1.0)
