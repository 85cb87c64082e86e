"""Fourier transform of V_m, in closed integral form and by direct quadrature."""

import logging
import math
from typing import Optional

from scipy import special

from ..core.errors import DomainError, NonConvergenceError
from ..kernel.quadrature import (
    LaguerreWeight,
    QuadratureSpec,
    integrate_finite,
    integrate_oscillatory,
    integrate_semi_infinite,
    truncation_point,
)
from ..kernel.special import exp_integral_e1
from .evaluation import v

logger = logging.getLogger(__name__)

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def fourier_v(m: float, xi: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    Fourier transform of V_m with the unitary convention.

        V^_m(xi) = (1/sqrt(2 pi)) int_0^inf s^m e^{-s} / (xi^2/4 + s)^{m+1} ds

    Args:
        m: Order, m > -1
        xi: Frequency, xi != 0 (the transform diverges logarithmically at 0)
        spec: Quadrature tolerances

    Returns:
        The transform, positive and even in xi

    Raises:
        DomainError: If xi = 0 or m <= -1
        NonConvergenceError: If the quadrature fails
    """
    if not m > -1:
        raise DomainError(f"Fourier transform requires m > -1, got {m}")
    if xi == 0 or not math.isfinite(xi):
        raise DomainError("Fourier transform of V_m diverges logarithmically at xi = 0")
    spec = spec or QuadratureSpec()
    a = 0.25 * xi * xi

    def integrand(s: float) -> float:
        if s <= 0.0:
            return 0.0
        return math.exp(m * math.log(s) - s - (m + 1.0) * math.log(a + s))

    cutoff = truncation_point(max(m, 0.0), spec.abs_tol)
    breaks = sorted({min(a, cutoff), min(max(a, 1.0), cutoff)})
    result = None
    start = 0.0
    for end in breaks:
        if end > start:
            piece = integrate_finite(integrand, start, end, spec)
            result = piece if result is None else result + piece
            start = end
    if start < cutoff:
        tail = integrate_semi_infinite(integrand, spec, LaguerreWeight(0.0), lower=start)
        result = tail if result is None else result + tail

    if result is None or not result.converged:
        raise NonConvergenceError(f"Fourier integral for m = {m}, xi = {xi} did not converge")
    return INV_SQRT_2PI * result.value


def fourier_v0_closed(xi: float) -> float:
    """e^{xi^2/4} E1(xi^2/4) / sqrt(2 pi), the m = 0 transform."""
    if xi == 0:
        raise DomainError("Fourier transform of V_0 diverges logarithmically at xi = 0")
    a = 0.25 * xi * xi
    if a > 700.0:
        # asymptotic form of e^a E1(a); exp(a) overflows here
        return INV_SQRT_2PI * (1.0 - 1.0 / a + 2.0 / (a * a)) / a
    return INV_SQRT_2PI * math.exp(a) * exp_integral_e1(a)


def default_window(xi: float) -> float:
    """Window X = 200 / max(|xi|, 0.1) of the direct transform."""
    return 200.0 / max(abs(xi), 0.1)


def fourier_v_direct(
    m: float,
    xi: float,
    window: Optional[float] = None,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Direct transform (2/sqrt(2 pi)) int_0^X V_m(x) cos(xi x) dx plus an analytic tail.

    Beyond X the integrand is replaced by its expansion 1/x - (m+1)/(2x^3),
    whose cosine transform over [X, inf) is -Ci(xi X) + (m+1) sin(xi X) / (2 xi X^3)
    to leading order.
    """
    if xi == 0:
        raise DomainError("Direct transform needs xi != 0")
    if not m > -0.5:
        raise DomainError(f"Direct transform is implemented for m > -1/2, got {m}")
    xi = abs(xi)
    X = window if window is not None else default_window(xi)
    spec = spec or QuadratureSpec(rel_tol=1e-8, abs_tol=1e-10, max_subdivisions=2000)

    body = integrate_oscillatory(lambda x: v(m, x).value, 0.0, X, xi, spec, kind="cos")
    if not body.converged:
        logger.warning("Direct transform body for m = %g, xi = %g did not converge", m, xi)
        raise NonConvergenceError(f"Direct transform for m = {m}, xi = {xi} did not converge")

    arg = xi * X
    _, ci = special.sici(arg)
    tail = -float(ci) + (m + 1.0) * math.sin(arg) / (2.0 * xi * X**3)
    return 2.0 * INV_SQRT_2PI * (body.value + tail)


def log_singularity_slope(m: float, xi_small: float, xi_smaller: float) -> float:
    """
    Slope of V^_m against log(xi^2/4) between two small frequencies.

    It tends to -1/sqrt(2 pi) as both frequencies approach zero.
    """
    a1 = math.log(0.25 * xi_small**2)
    a2 = math.log(0.25 * xi_smaller**2)
    return (fourier_v(m, xi_small) - fourier_v(m, xi_smaller)) / (a1 - a2)

