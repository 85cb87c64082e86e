"""Evaluation of the regularized Coulomb potentials V_m(x).

    V_m(x) = 1/Gamma(m+1) * int_0^inf u^m e^{-u} / sqrt(x^2 + u) du

for real m > -1 and x >= 0, with the convention V_{-1}(x) = 1/x.
Several strategies are available; ``v`` picks one automatically or runs the
one requested, and records which was used.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
from scipy import special

from ..core.config import AppConfig
from ..core.errors import DomainError, NonConvergenceError
from ..kernel.quadrature import (
    IntegrationResult,
    LaguerreWeight,
    QuadratureSpec,
    integrate_finite,
    integrate_semi_infinite,
    truncation_point,
)
from ..kernel.special import erfcx, log_gammafn
from .bounds import bracket

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
_EPS = float(np.finfo(float).eps)


class Strategy(str, Enum):
    """How a value of V_m was obtained."""

    AUTO = "auto"
    QUADRATURE = "quadrature"
    CLOSED_M0 = "closed_m0"
    RECURSION = "recursion"
    ASYMPTOTIC = "asymptotic"
    POLYNOMIAL = "polynomial"
    ORIGIN = "origin"
    COULOMB = "coulomb"


@dataclass(frozen=True)
class PotentialIndex:
    """The order m of V_m: real m > -1, or exactly -1 for the Coulomb sentinel."""

    m: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.m):
            raise DomainError(f"Potential index must be finite, got {self.m}")
        if self.m < -1:
            raise DomainError(f"Potential index must satisfy m >= -1, got {self.m}")

    @classmethod
    def of(cls, m: Union[float, "PotentialIndex"]) -> "PotentialIndex":
        return m if isinstance(m, PotentialIndex) else cls(float(m))

    @property
    def is_coulomb(self) -> bool:
        return self.m == -1

    @property
    def is_integer(self) -> bool:
        return float(self.m).is_integer()


@dataclass(frozen=True)
class EvalResult:
    """A value of the V_m family with its error estimate and provenance."""

    value: float
    error_estimate: float
    strategy: Strategy
    diagnostics: Dict[str, Any] = field(default_factory=dict)


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"V_m is evaluated at finite x >= 0 (pass |x|), got {x}")
    return x


def x_switch(m: float) -> float:
    """Abscissa beyond which ``v`` prefers the asymptotic series."""
    return math.sqrt(50.0 + 10.0 * m)


# ----------------------------------------------------------------------------
# Closed forms
# ----------------------------------------------------------------------------


def v_at_zero(m: float) -> float:
    """
    V_m(0) = Gamma(m + 1/2) / Gamma(m + 1), computed through log-Gamma.

    Args:
        m: Order, m > -1/2

    Returns:
        The value at the origin

    Raises:
        DomainError: If m <= -1/2 (the defining integral diverges at x = 0)
    """
    if not m > -0.5:
        raise DomainError(f"V_m(0) is finite only for m > -1/2, got m = {m}")
    return math.exp(log_gammafn(m + 0.5) - log_gammafn(m + 1.0))


def v_at_zero_stirling(m: float) -> float:
    """Stirling form ((m - 1/2)/m)^m (e/m)^{1/2} of V_m(0), for large m."""
    if not m > 0.5:
        raise DomainError(f"Stirling form of V_m(0) needs m > 1/2, got {m}")
    return ((m - 0.5) / m) ** m * math.sqrt(math.e / m)


def v_closed_m0(x: float) -> float:
    """V_0(x) = sqrt(pi) * erfcx(x)."""
    return SQRT_PI * erfcx(_check_x(x))


# ----------------------------------------------------------------------------
# Quadrature
# ----------------------------------------------------------------------------


def v_quadrature(m: float, x: float, spec: Optional[QuadratureSpec] = None) -> EvalResult:
    """
    V_m(x) from the defining integral.

    The range is split at u = x^2; below the split (and up to u = 1) the
    substitution u = v^2 removes the u^{m-1/2} behaviour at the origin, the
    remainder is a Laguerre-weighted semi-infinite integral.

    Raises:
        NonConvergenceError: If any piece fails to converge
    """
    spec = spec or QuadratureSpec()
    x = _check_x(x)
    if not m > -1:
        raise DomainError(f"Quadrature requires m > -1, got {m}")
    if x == 0 and not m > -0.5:
        raise DomainError(f"V_m(0) diverges for m <= -1/2, got m = {m}")

    log_norm = log_gammafn(m + 1.0)
    power = 2.0 * m + 1.0

    def in_v(v: float) -> float:
        if v <= 0.0:
            return 0.0
        return 2.0 * math.exp(power * math.log(v) - v * v - log_norm) / math.hypot(x, v)

    def in_u(u: float) -> float:
        return math.exp(m * math.log(u) - u - log_norm) / math.hypot(x, math.sqrt(u))

    cutoff = truncation_point(m, spec.abs_tol)
    v_cut = math.sqrt(cutoff)
    v_split = max(1.0, x)

    pieces: List[IntegrationResult] = []
    inner_end = min(x, v_cut)
    if inner_end > 0.0:
        pieces.append(integrate_finite(in_v, 0.0, inner_end, spec))
    middle_end = min(v_split, v_cut)
    if middle_end > inner_end:
        pieces.append(integrate_finite(in_v, inner_end, middle_end, spec))
    if v_split * v_split < cutoff:
        pieces.append(
            integrate_semi_infinite(in_u, spec, LaguerreWeight(m), lower=v_split * v_split)
        )

    total = pieces[0]
    for piece in pieces[1:]:
        total = total + piece

    if not total.converged:
        logger.warning("Quadrature for V_%g(%g) did not converge", m, x)
        raise NonConvergenceError(f"Quadrature for V_{m}({x}) did not converge")

    return EvalResult(
        value=total.value,
        error_estimate=total.error_estimate,
        strategy=Strategy.QUADRATURE,
        diagnostics={
            "evaluations": total.evaluations,
            "truncation": cutoff,
            "pieces": len(pieces),
        },
    )


# ----------------------------------------------------------------------------
# Recursions
# ----------------------------------------------------------------------------


def v_recursion(m: float, x: float, seeds: Tuple[float, float]) -> float:
    """
    One step of V_m = (1/m) [(m - 1/2 - x^2) V_{m-1} + x^2 V_{m-2}].

    Args:
        m: Order, m >= 1
        x: Abscissa, x > 0
        seeds: (V_{m-1}(x), V_{m-2}(x))

    Returns:
        V_m(x)
    """
    if m < 1:
        raise DomainError(f"Recursion step requires m >= 1, got {m}")
    if not x > 0:
        raise DomainError(f"Recursion step requires x > 0, got {x}")
    previous, before = seeds
    x2 = x * x
    return ((m - 0.5 - x2) * previous + x2 * before) / m


def v_recursion_chain(m: float, x: float, spec: Optional[QuadratureSpec] = None) -> EvalResult:
    """
    V_m(x) by upward recursion from its fractional part.

    Integer m starts from V_{-1} = 1/x and the closed form of V_0; other m
    start from quadrature values of V_{f-1} and V_f, f = m - floor(m).
    The error estimate tracks the largest intermediate term, which is where
    cancellation at large x shows up.
    """
    x = _check_x(x)
    if m < 1:
        raise DomainError(f"Recursion chain requires m >= 1, got {m}")
    if x == 0:
        raise DomainError("Recursion chain requires x > 0")

    fraction = m - math.floor(m)
    if fraction == 0.0:
        before, previous = 1.0 / x, v_closed_m0(x)
        order = 1.0
    else:
        before = v_quadrature(fraction - 1.0, x, spec).value
        previous = v_quadrature(fraction, x, spec).value
        order = fraction + 1.0

    x2 = x * x
    largest = max(abs(previous), abs(before))
    steps = 0
    while order <= m + 1e-12:
        largest = max(largest, abs((order - 0.5 - x2) * previous) / order, x2 * abs(before) / order)
        before, previous = previous, v_recursion(order, x, (previous, before))
        order += 1.0
        steps += 1

    return EvalResult(
        value=previous,
        error_estimate=4.0 * _EPS * largest * max(steps, 1),
        strategy=Strategy.RECURSION,
        diagnostics={"steps": steps, "largest_term": largest},
    )


def v_iterated(m: int, x: float) -> float:
    """
    Integer-m form V_m = (1/2m) [(1 - 2x^2) V_{m-1} + sum_{k<=m-2} V_k + 2x].

    Raises:
        DomainError: If m is not a positive integer or x <= 0
    """
    if not float(m).is_integer() or m < 1:
        raise DomainError(f"Iterated recursion needs a positive integer m, got {m}")
    if not x > 0:
        raise DomainError(f"Iterated recursion requires x > 0, got {x}")

    values = [v_closed_m0(x)]
    for order in range(1, int(m) + 1):
        total = math.fsum([(1.0 - 2.0 * x * x) * values[-1], *values[:-1], 2.0 * x])
        values.append(total / (2.0 * order))
    return values[-1]


# ----------------------------------------------------------------------------
# Asymptotic expansion
# ----------------------------------------------------------------------------


def asymptotic_terms(m: float, x: float, count: int) -> List[float]:
    """First ``count`` terms (-1)^k (2k-1)!!/(2^k k!) Gamma(m+k+1)/Gamma(m+1) x^{-2k-1}."""
    terms = [1.0 / x]
    x2 = x * x
    for k in range(1, count):
        terms.append(-terms[-1] * (2 * k - 1) / (2 * k) * (m + k) / x2)
    return terms


def v_asymptotic(m: float, x: float, order: int) -> EvalResult:
    """
    Large-x expansion of V_m truncated after the term of index ``order``.

    The error estimate is the magnitude of the first omitted term.

    Raises:
        NonConvergenceError: If x^2 <= m + order (outside the range where
            the terms still decrease)
    """
    x = _check_x(x)
    if not m > -1:
        raise DomainError(f"Asymptotic series requires m > -1, got {m}")
    if x == 0:
        raise DomainError("Asymptotic series requires x > 0")
    if order < 0:
        raise DomainError(f"Order must be non-negative, got {order}")
    if order >= 1 and not x * x > m + order:
        raise NonConvergenceError(
            f"Asymptotic order {order} is outside its range at m = {m}, x = {x}"
        )

    terms = asymptotic_terms(m, x, order + 2)
    return EvalResult(
        value=math.fsum(terms[: order + 1]),
        error_estimate=abs(terms[order + 1]),
        strategy=Strategy.ASYMPTOTIC,
        diagnostics={"order": order, "validity": x * x - (m + order)},
    )


def _asymptotic_to_target(m: float, x: float, target: float) -> Optional[EvalResult]:
    """Shortest truncation whose first omitted term is below target * value, if any."""
    x2 = x * x
    terms = [1.0 / x]
    order = 0
    while x2 > m + order + 1:
        k = order + 1
        terms.append(-terms[-1] * (2 * k - 1) / (2 * k) * (m + k) / x2)
        partial = math.fsum(terms[:-1])
        if abs(terms[-1]) < target * abs(partial):
            return EvalResult(
                value=partial,
                error_estimate=abs(terms[-1]),
                strategy=Strategy.ASYMPTOTIC,
                diagnostics={"order": order, "validity": x2 - (m + order)},
            )
        if abs(terms[-1]) > abs(terms[-2]):
            return None
        order += 1
    return None


# ----------------------------------------------------------------------------
# Dispatch
# ----------------------------------------------------------------------------


def _check_bracket(m: float, x: float, result: EvalResult) -> None:
    if m <= 0:
        return
    low, high = bracket(m, x)
    slack = 1e-12 * result.value + result.error_estimate
    if not (low - slack <= result.value <= high + slack):
        logger.warning(
            "V_%g(%g) = %.17g from %s lies outside its bracket (%.17g, %.17g)",
            m, x, result.value, result.strategy.value, low, high,
        )


def v(
    m: Union[float, PotentialIndex],
    x: float,
    method: Union[str, Strategy] = Strategy.AUTO,
    spec: Optional[QuadratureSpec] = None,
) -> EvalResult:
    """
    Evaluate V_m(x).

    Args:
        m: Order (m > -1, or -1 for the Coulomb sentinel 1/x)
        x: Abscissa, x >= 0 (V_m is even; pass |x|)
        method: A Strategy or "auto"
        spec: Quadrature tolerances

    Returns:
        EvalResult with the strategy actually used

    Raises:
        DomainError: Outside the domain (including x = 0 with m <= -1/2)
        NonConvergenceError: If the chosen strategy cannot deliver a value
    """
    index = PotentialIndex.of(m)
    order = index.m
    x = _check_x(x)
    method = Strategy(method)

    if index.is_coulomb:
        if x == 0:
            raise DomainError("V_{-1}(0) = 1/|x| diverges at x = 0")
        return EvalResult(1.0 / x, 0.0, Strategy.COULOMB)
    if x == 0 and not order > -0.5:
        raise DomainError(f"V_m(0) diverges for m <= -1/2, got m = {order}")

    if method is Strategy.AUTO:
        result = _auto(order, x, spec)
    elif method is Strategy.QUADRATURE:
        result = v_quadrature(order, x, spec)
    elif method is Strategy.CLOSED_M0:
        if order != 0:
            raise DomainError(f"Closed form applies to m = 0 only, got m = {order}")
        value = v_closed_m0(x)
        result = EvalResult(value, 4.0 * _EPS * value, Strategy.CLOSED_M0)
    elif method is Strategy.ORIGIN:
        if x != 0:
            raise DomainError("Origin formula applies at x = 0 only")
        value = v_at_zero(order)
        result = EvalResult(value, 4.0 * _EPS * value, Strategy.ORIGIN)
    elif method is Strategy.RECURSION:
        result = v_recursion_chain(order, x, spec)
    elif method is Strategy.ASYMPTOTIC:
        if x == 0 or not x * x > order + 1:
            raise NonConvergenceError(f"Asymptotic series is not usable at m = {order}, x = {x}")
        result = _asymptotic_to_target(order, x, AppConfig.ASYMPTOTIC_TARGET)
        if result is None:
            result = _smallest_term_truncation(order, x)
    elif method is Strategy.POLYNOMIAL:
        from .polynomials import v_polynomial

        result = v_polynomial(order, x)
    else:
        raise DomainError(f"Strategy {method.value} cannot be requested directly")

    _check_bracket(order, x, result)
    return result


def _smallest_term_truncation(m: float, x: float) -> EvalResult:
    """Truncate the asymptotic series just before its smallest term."""
    order = 0
    while x * x > m + order + 1:
        if abs(asymptotic_terms(m, x, order + 3)[-1]) >= abs(asymptotic_terms(m, x, order + 2)[-1]):
            break
        order += 1
    return v_asymptotic(m, x, order)


def _auto(m: float, x: float, spec: Optional[QuadratureSpec]) -> EvalResult:
    if x == 0:
        value = v_at_zero(m)
        return EvalResult(value, 4.0 * _EPS * value, Strategy.ORIGIN)
    if m == 0:
        value = v_closed_m0(x)
        return EvalResult(value, 4.0 * _EPS * value, Strategy.CLOSED_M0)
    if x > x_switch(m):
        result = _asymptotic_to_target(m, x, AppConfig.ASYMPTOTIC_TARGET)
        if result is not None:
            logger.debug("V_%g(%g): asymptotic order %d", m, x, result.diagnostics["order"])
            return result
        logger.debug("V_%g(%g): asymptotic series too short, using quadrature", m, x)
    spec = spec or QuadratureSpec()
    if spec.rel_tol > AppConfig.AUTO_REL_ERROR:
        spec = replace(spec, rel_tol=AppConfig.AUTO_REL_ERROR)
    return v_quadrature(m, x, spec)


def v_value(m: Union[float, PotentialIndex], x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Shorthand for ``v(m, x, spec=spec).value``."""
    return v(m, x, spec=spec).value


def v_values(
    m: float, xs: Union[Iterable[float], np.ndarray], spec: Optional[QuadratureSpec] = None
) -> np.ndarray:
    """
    V_m at every entry of ``xs`` (any sign; V_m is even).

    m = 0 and m = -1 are fully vectorised; otherwise each distinct |x| is
    evaluated once.
    """
    points = np.abs(np.asarray(xs, dtype=float))
    if m == 0:
        return SQRT_PI * special.erfcx(points)
    if m == -1:
        if np.any(points == 0):
            raise DomainError("V_{-1}(0) = 1/|x| diverges at x = 0")
        return 1.0 / points

    unique, inverse = np.unique(points, return_inverse=True)
    values = np.array([v(m, float(u), spec=spec).value for u in unique])
    return values[inverse].reshape(points.shape)


# ----------------------------------------------------------------------------
# Derivative and related
# ----------------------------------------------------------------------------


def v_derivative(m: float, x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """
    V_m'(x) = 2x (V_m(x) - V_{m-1}(x)), m >= 0.

    At x = 0 this is the one-sided slope -2 for m = 0 (V_0 has a cusp) and
    0 for m > 0.
    """
    x = _check_x(x)
    if m < 0:
        raise DomainError(f"Derivative formula holds for m >= 0, got {m}")
    if x == 0:
        return -2.0 if m == 0 else 0.0
    return 2.0 * x * (v(m, x, spec=spec).value - v(m - 1.0, x, spec=spec).value)


def convexity_in_m_defect(m: float, x: float, spec: Optional[QuadratureSpec] = None) -> float:
    """V_{m+1}(x) + V_{m-1}(x) - 2 V_m(x); its sign is an open question, never asserted."""
    if m < 0:
        raise DomainError(f"Convexity in m is probed for m >= 0, got {m}")
    x = _check_x(x)
    return (
        v(m + 1.0, x, spec=spec).value
        + v(m - 1.0, x, spec=spec).value
        - 2.0 * v(m, x, spec=spec).value
    )
