"""Delta-function limit of the scaled potentials (beta / log beta) V_m(beta x)."""

import logging
import math
from typing import Callable, Dict, Optional

import numpy as np

from ..core.errors import DomainError, NonConvergenceError
from ..kernel.quadrature import QuadratureSpec, integrate_finite
from ..potential.evaluation import v, v_values

logger = logging.getLogger(__name__)

TestFunction = Callable[[float], float]


def gaussian(x: float) -> float:
    return math.exp(-x * x)


TEST_FUNCTIONS: Dict[str, TestFunction] = {"gaussian": gaussian}


def _check_beta(beta: float) -> float:
    if not (math.isfinite(beta) and beta > math.e):
        raise DomainError(f"Scaling parameter must satisfy beta > e, got {beta}")
    return float(beta)


def delta_scaled(m: float, beta: float, x: float) -> float:
    """(beta / log beta) V_m(beta |x|); x = 0 needs m > -1/2."""
    beta = _check_beta(beta)
    return beta / math.log(beta) * v(m, beta * abs(x)).value


def delta_scaled_values(m: float, beta: float, xs: np.ndarray) -> np.ndarray:
    beta = _check_beta(beta)
    return beta / math.log(beta) * v_values(m, beta * np.abs(np.asarray(xs, dtype=float)))


def _scaled_integral(
    m: float,
    beta: float,
    weight: Callable[[float], float],
    support: float,
    spec: QuadratureSpec,
) -> float:
    """
    int_0^{beta*support} V_m(t) weight(t) dt.

    [0, 1] is integrated in t; the rest in s = log t, where V_m(t) t is
    bounded.
    """
    upper = beta * support
    head = integrate_finite(lambda t: v(m, t).value * weight(t), 0.0, min(1.0, upper), spec)
    total = head
    if upper > 1.0:

        def in_log(s: float) -> float:
            t = math.exp(s)
            return v(m, t).value * weight(t) * t

        total = head + integrate_finite(in_log, 0.0, math.log(upper), spec)
    if not total.converged:
        raise NonConvergenceError(f"Delta-limit integral at beta = {beta} did not converge")
    return total.value


def delta_pairing(
    m: float,
    beta: float,
    testfn: TestFunction = gaussian,
    support: float = 10.0,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Normalized pairing (1/2) int (beta / log beta) V_m(beta |x|) phi(x) dx.

    Each half-line carries mass log(beta) asymptotically, so the scaled
    potential has total mass 2; the factor 1/2 makes the pairing tend to
    phi(0).

    Args:
        m: Order, m > -1/2
        beta: Scale, beta > e
        testfn: Smooth test function, negligible beyond |x| = support
        support: Half-width of the integration window in x
        spec: Quadrature tolerances

    Returns:
        The pairing; testfn identically zero gives exactly 0
    """
    beta = _check_beta(beta)
    if not m > -0.5:
        raise DomainError(f"Delta pairing requires m > -1/2, got {m}")
    spec = spec or QuadratureSpec(rel_tol=1e-9, abs_tol=1e-13)

    def symmetric(t: float) -> float:
        return testfn(t / beta) + testfn(-t / beta)

    integral = _scaled_integral(m, beta, symmetric, support, spec)
    return 0.5 * integral / math.log(beta)


def delta_mass(
    m: float,
    beta: float,
    half_width: float = 1.0,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """int_{|x| <= half_width} (beta / log beta) V_m(beta |x|) dx; tends to 2."""
    beta = _check_beta(beta)
    if not half_width > 0:
        raise DomainError(f"Half-width must be positive, got {half_width}")
    spec = spec or QuadratureSpec(rel_tol=1e-9, abs_tol=1e-13)
    return 2.0 * _scaled_integral(m, beta, lambda t: 1.0, half_width, spec) / math.log(beta)
