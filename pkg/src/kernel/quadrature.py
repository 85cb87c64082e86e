"""Adaptive integration on finite and semi-infinite intervals."""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate, special

from ..core.config import AppConfig
from ..core.errors import DomainError

logger = logging.getLogger(__name__)

Integrand = Callable[[float], float]

# QUADPACK refuses epsabs <= 0 with epsrel below this
_QUADPACK_REL_FLOOR = 50.0 * np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and limits for one integration."""

    rel_tol: float = AppConfig.REL_TOL
    abs_tol: float = AppConfig.ABS_TOL
    max_subdivisions: int = AppConfig.MAX_SUBDIVISIONS
    rule_order: int = AppConfig.RULE_ORDER

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_tol >= 0:
            raise DomainError(f"abs_tol must be non-negative, got {self.abs_tol}")
        if self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions must be >= 1, got {self.max_subdivisions}")
        if self.rule_order < 2:
            raise DomainError(f"rule_order must be >= 2, got {self.rule_order}")

    @property
    def quadpack_rel_tol(self) -> float:
        """rel_tol raised to the floor QUADPACK accepts when abs_tol is zero."""
        if self.abs_tol > 0:
            return self.rel_tol
        return max(self.rel_tol, _QUADPACK_REL_FLOOR)

    def tolerance_for(self, value: float) -> float:
        """Acceptable absolute error for a result of size ``value``."""
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class LaguerreWeight:
    """Hint that the integrand decays like u^alpha e^{-u}."""

    alpha: float

    def __post_init__(self) -> None:
        if not self.alpha > -1:
            raise DomainError(f"Laguerre weight requires alpha > -1, got {self.alpha}")


@dataclass(frozen=True)
class IntegrationResult:
    """Outcome of a quadrature; ``value`` is meaningful only when converged."""

    value: float
    error_estimate: float
    evaluations: int
    converged: bool
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __add__(self, other: "IntegrationResult") -> "IntegrationResult":
        merged = dict(self.diagnostics)
        for key, item in other.diagnostics.items():
            merged.setdefault(key, item)
        return IntegrationResult(
            value=self.value + other.value,
            error_estimate=self.error_estimate + other.error_estimate,
            evaluations=self.evaluations + other.evaluations,
            converged=self.converged and other.converged,
            diagnostics=merged,
        )


def _run_quad(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec,
    points: Optional[Sequence[float]] = None,
) -> IntegrationResult:
    """Call QUADPACK and translate its status into an IntegrationResult."""
    kwargs: Dict[str, Any] = {
        "epsabs": spec.abs_tol,
        "epsrel": spec.quadpack_rel_tol,
        "limit": spec.max_subdivisions,
        "full_output": 1,
    }
    if points:
        kwargs["points"] = sorted(p for p in points if a < p < b)

    out = integrate.quad(f, a, b, **kwargs)
    value, error = float(out[0]), float(out[1])
    info = out[2]
    # QUADPACK appends a message only when ier != 0
    status_ok = len(out) == 3
    converged = status_ok and math.isfinite(value) and error <= spec.tolerance_for(value)

    diagnostics = {
        "strategy": "adaptive",
        "subintervals": int(info.get("last", 0)),
    }
    if not converged:
        diagnostics["message"] = out[3] if len(out) > 3 else "tolerance not reached"
        logger.debug("Quadrature on [%g, %g] did not converge: %s", a, b, diagnostics["message"])

    return IntegrationResult(
        value=value,
        error_estimate=abs(error),
        evaluations=int(info.get("neval", 0)),
        converged=converged,
        diagnostics=diagnostics,
    )


def integrate_finite(
    f: Integrand,
    a: float,
    b: float,
    spec: Optional[QuadratureSpec] = None,
    points: Optional[Sequence[float]] = None,
) -> IntegrationResult:
    """
    Integrate ``f`` over [a, b] adaptively.

    Integrable endpoint singularities are handled by the extrapolating
    QUADPACK rule; interior trouble spots should be passed in ``points``.

    Args:
        f: Integrand
        a: Lower limit
        b: Upper limit, b > a
        spec: Tolerances (defaults from AppConfig)
        points: Optional interior break points

    Returns:
        IntegrationResult, converged = False if the tolerance was not met
    """
    spec = spec or QuadratureSpec()
    if not a < b:
        raise DomainError(f"integrate_finite requires a < b, got [{a}, {b}]")
    return _run_quad(f, a, b, spec, points)


def integrate_oscillatory(
    f: Integrand,
    a: float,
    b: float,
    omega: float,
    spec: Optional[QuadratureSpec] = None,
    kind: str = "cos",
) -> IntegrationResult:
    """
    Integrate f(x) cos(omega x) (or sin) over [a, b] with the QUADPACK
    Clenshaw-Curtis rule for trigonometric weights.
    """
    spec = spec or QuadratureSpec()
    if kind not in ("cos", "sin"):
        raise DomainError(f"Oscillatory weight must be 'cos' or 'sin', got {kind!r}")
    if not a < b:
        raise DomainError(f"integrate_oscillatory requires a < b, got [{a}, {b}]")

    out = integrate.quad(
        f, a, b,
        weight=kind, wvar=omega,
        epsabs=spec.abs_tol, epsrel=spec.quadpack_rel_tol,
        limit=spec.max_subdivisions, full_output=1,
    )
    value, error = float(out[0]), float(out[1])
    info = out[2]
    status_ok = len(out) == 3
    converged = status_ok and math.isfinite(value) and error <= spec.tolerance_for(value)
    return IntegrationResult(
        value=value,
        error_estimate=abs(error),
        evaluations=int(info.get("neval", 0)),
        converged=converged,
        diagnostics={"strategy": f"oscillatory-{kind}", "omega": omega},
    )


def truncation_point(alpha: float, abs_tol: float, lower: float = 0.0) -> float:
    """Smallest U (on a geometric ladder) past the weight's peak with U^alpha e^{-U} < abs_tol."""
    log_tol = math.log(abs_tol) if abs_tol > 0 else math.log(np.finfo(float).tiny)
    upper = max(lower, alpha, 0.0) + 1.0
    while alpha * math.log(upper) - upper >= log_tol:
        upper *= 1.25
    return upper


@lru_cache(maxsize=32)
def _laguerre_rule(order: int, alpha: float) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_genlaguerre(order, alpha)
    return nodes, weights


def _gauss_laguerre(
    f: Integrand, alpha: float, lower: float, spec: QuadratureSpec
) -> IntegrationResult:
    """Generalized Gauss-Laguerre rule at orders n and 2n; error from their difference."""
    order = min(spec.rule_order, AppConfig.MAX_RULE_ORDER // 2)

    def apply(n: int) -> float:
        nodes, weights = _laguerre_rule(n, alpha)
        values = np.array([f(lower + t) for t in nodes])
        smooth = values * np.exp(nodes)
        if alpha != 0.0:
            smooth = smooth * nodes ** (-alpha)
        return float(np.dot(weights, smooth))

    coarse = apply(order)
    fine = apply(2 * order)
    error = abs(fine - coarse)
    converged = math.isfinite(fine) and error <= spec.tolerance_for(fine)
    return IntegrationResult(
        value=fine,
        error_estimate=error,
        evaluations=3 * order,
        converged=converged,
        diagnostics={"strategy": "laguerre", "rule_order": 2 * order, "alpha": alpha},
    )


def integrate_semi_infinite(
    f: Integrand,
    spec: Optional[QuadratureSpec] = None,
    weight_hint: Optional[LaguerreWeight] = None,
    lower: float = 0.0,
    method: str = "adaptive",
) -> IntegrationResult:
    """
    Integrate ``f`` over [lower, infinity).

    With a LaguerreWeight hint the adaptive path integrates on [lower, U]
    where U^alpha e^{-U} < abs_tol; U and the weight's tail mass beyond it
    are reported in the diagnostics. ``method="laguerre"`` uses generalized
    Gauss-Laguerre nodes instead (the weight's alpha is used only when
    lower == 0).

    Args:
        f: Integrand
        spec: Tolerances (defaults from AppConfig)
        weight_hint: Optional decay hint
        lower: Lower limit of integration
        method: "adaptive" or "laguerre"

    Returns:
        IntegrationResult, converged = False if the tolerance was not met
    """
    spec = spec or QuadratureSpec()
    if method not in ("adaptive", "laguerre"):
        raise DomainError(f"Unknown semi-infinite method {method!r}")

    if method == "laguerre":
        alpha = weight_hint.alpha if weight_hint is not None and lower == 0.0 else 0.0
        return _gauss_laguerre(f, alpha, lower, spec)

    if weight_hint is None:
        result = _run_quad(f, lower, math.inf, spec)
        result.diagnostics["truncation"] = math.inf
        return result

    alpha = weight_hint.alpha
    upper = truncation_point(alpha, spec.abs_tol, lower)
    tail = float(special.gammaincc(alpha + 1.0, upper) * special.gamma(alpha + 1.0))
    logger.debug("Laguerre truncation at U = %g (alpha = %g, tail mass %.3g)", upper, alpha, tail)

    result = _run_quad(f, lower, upper, spec)
    result.diagnostics["truncation"] = upper
    result.diagnostics["tail_bound"] = tail
    return result
