"""Numerical backbone: quadrature and scalar special functions."""

from .quadrature import (
    IntegrationResult,
    LaguerreWeight,
    QuadratureSpec,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
    truncation_point,
)
from .special import (
    betafn,
    erfcx,
    exp_integral_e1,
    gammafn,
    kummer_terminating,
    kummer_terminating_terms,
    log_gammafn,
)

__all__ = [
    "IntegrationResult",
    "LaguerreWeight",
    "QuadratureSpec",
    "integrate_finite",
    "integrate_oscillatory",
    "integrate_semi_infinite",
    "truncation_point",
    "betafn",
    "erfcx",
    "exp_integral_e1",
    "gammafn",
    "kummer_terminating",
    "kummer_terminating_terms",
    "log_gammafn",
]
