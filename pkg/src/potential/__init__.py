"""The V_m family: evaluation, bounds, polynomials, averages and transforms."""

from .averaged import v_av, v_av_derivative, v_av_identity, v_av_values
from .bounds import RatioBoundParams, G_k_m, bracket, g_k, large_x_bracket, ratio_bounds
from .evaluation import (
    EvalResult,
    PotentialIndex,
    Strategy,
    convexity_in_m_defect,
    v,
    v_asymptotic,
    v_at_zero,
    v_at_zero_stirling,
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
from .fourier import fourier_v, fourier_v0_closed, fourier_v_direct
from .polynomials import (
    RationalPolynomial,
    kummer_condition,
    pm_qm,
    pm_via_kummer,
    reconstruction_condition,
    v_polynomial,
)

__all__ = [
    "EvalResult",
    "PotentialIndex",
    "RatioBoundParams",
    "RationalPolynomial",
    "Strategy",
    "G_k_m",
    "bracket",
    "convexity_in_m_defect",
    "fourier_v",
    "fourier_v0_closed",
    "fourier_v_direct",
    "g_k",
    "kummer_condition",
    "large_x_bracket",
    "pm_qm",
    "pm_via_kummer",
    "ratio_bounds",
    "reconstruction_condition",
    "v",
    "v_asymptotic",
    "v_at_zero",
    "v_at_zero_stirling",
    "v_av",
    "v_av_derivative",
    "v_av_identity",
    "v_av_values",
    "v_closed_m0",
    "v_derivative",
    "v_iterated",
    "v_polynomial",
    "v_quadrature",
    "v_recursion",
    "v_recursion_chain",
    "v_value",
    "v_values",
    "x_switch",
]
