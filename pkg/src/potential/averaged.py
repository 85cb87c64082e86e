"""The averaged potential V_av^N = (1/N) sum_{m<N} V_m."""

import math
from typing import Optional, Tuple

import numpy as np

from ..core.errors import DomainError
from ..kernel.quadrature import QuadratureSpec
from .evaluation import v, v_values


def _check_n(N: int) -> int:
    if not float(N).is_integer() or N < 1:
        raise DomainError(f"V_av^N needs an integer N >= 1, got {N}")
    return int(N)


def v_av(N: int, x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    Average of V_0, ..., V_{N-1} at x >= 0.

    Args:
        N: Number of occupied Landau states, N >= 1
        x: Abscissa, x >= 0
        spec: Quadrature tolerances

    Returns:
        V_av^N(x)
    """
    N = _check_n(N)
    return math.fsum(v(float(m), x, spec=spec).value for m in range(N)) / N


def v_av_identity(N: int, x: float, spec: Optional[QuadratureSpec] = None) -> Tuple[float, float]:
    """
    The closed form 2 V_N - (2x^2/N) (V_{-1} - V_{N-1}).

    Returns:
        (value, scale) where scale is the sum of the magnitudes of the two
        terms; relative comparisons against v_av should use it, since the
        terms cancel at large x.
    """
    N = _check_n(N)
    if x < 0:
        raise DomainError(f"V_av^N is evaluated at x >= 0, got {x}")
    lead = 2.0 * v(float(N), x, spec=spec).value
    if x == 0:
        return lead, lead
    correction = (2.0 * x / N) * (1.0 - x * v(float(N - 1), x, spec=spec).value)
    return lead - correction, lead + abs(correction)


def v_av_derivative(N: int, x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """(2x/N) V_{N-1}(x) - 2/N; the value at x = 0 is the one-sided slope -2/N."""
    N = _check_n(N)
    if x < 0:
        raise DomainError(f"V_av^N is evaluated at x >= 0, got {x}")
    if x == 0:
        return -2.0 / N
    return (2.0 * x / N) * v(float(N - 1), x, spec=spec).value - 2.0 / N


def v_av_values(N: int, xs: np.ndarray, spec: Optional[QuadratureSpec] = None) -> np.ndarray:
    """V_av^N at every entry of ``xs`` (any sign)."""
    N = _check_n(N)
    total = np.zeros_like(np.asarray(xs, dtype=float))
    for m in range(N):
        total = total + v_values(float(m), xs, spec)
    return total / N
