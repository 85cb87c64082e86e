"""Lowest-Landau-band pair states reduced to relative-momentum weights.

A pair of Landau states gamma_{m1}(zeta_1) gamma_{m2}(zeta_2) is rewritten in
centre-of-mass and relative coordinates Z = (zeta_1 + zeta_2)/sqrt(2),
R = (zeta_1 - zeta_2)/sqrt(2). The squared amplitude on relative momentum k
is the weight of (1/sqrt(2)) V_k(s/sqrt(2)) in the effective interaction.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Optional, Tuple

import numpy as np

from ..core.errors import DomainError, NonConvergenceError, NullStateError
from ..kernel.quadrature import LaguerreWeight, QuadratureSpec, integrate_semi_infinite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairCoefficients:
    """Relative-momentum decomposition of one pair of Landau states."""

    m1: int
    m2: int
    antisymmetrized: bool
    exact: Tuple[Tuple[int, Fraction], ...]

    @property
    def weights(self) -> Tuple[Tuple[int, float], ...]:
        return tuple((k, float(w)) for k, w in self.exact)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.exact)

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.exact)


def _check_momentum(m: int, name: str) -> int:
    if not float(m).is_integer() or m < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {m}")
    return int(m)


def relative_amplitudes(m1: int, m2: int) -> Dict[int, Fraction]:
    """
    Coefficients A_k of Z^{m1+m2-k} R^k in zeta_1^{m1} zeta_2^{m2}, without 2^{-(m1+m2)/2}.

    A_k = sum_{a+b=k} C(m1, a) C(m2, b) (-1)^b
    """
    amplitudes: Dict[int, Fraction] = {}
    for a in range(m1 + 1):
        for b in range(m2 + 1):
            k = a + b
            amplitudes[k] = amplitudes.get(k, Fraction(0)) + comb(m1, a) * comb(m2, b) * (-1) ** b
    return amplitudes


@lru_cache(maxsize=None)
def pair_decomposition(m1: int, m2: int, antisymmetrize: bool = False) -> PairCoefficients:
    """
    Decompose a Landau pair into weights on relative momenta.

    Args:
        m1: Angular momentum of the first state, >= 0
        m2: Angular momentum of the second state, >= 0
        antisymmetrize: Use the normalized antisymmetric combination

    Returns:
        PairCoefficients with exact rational weights summing to 1

    Raises:
        NullStateError: If antisymmetrize is requested with m1 == m2
    """
    m1 = _check_momentum(m1, "m1")
    m2 = _check_momentum(m2, "m2")
    if antisymmetrize and m1 == m2:
        raise NullStateError(f"Antisymmetrized pair of identical states m = {m1} vanishes")

    total = m1 + m2
    norm = Fraction(1, 2**total * factorial(m1) * factorial(m2))
    weights: Dict[int, Fraction] = {}
    for k, amplitude in relative_amplitudes(m1, m2).items():
        if amplitude == 0:
            continue
        weight = amplitude * amplitude * factorial(total - k) * factorial(k) * norm
        if antisymmetrize:
            if k % 2 == 0:
                continue
            weight *= 2
        weights[k] = weight

    if sum(weights.values()) != 1:
        raise ArithmeticError(f"Pair weights for ({m1}, {m2}) do not sum to one")

    return PairCoefficients(
        m1=m1,
        m2=m2,
        antisymmetrized=antisymmetrize,
        exact=tuple(sorted(weights.items())),
    )


def transverse_interaction_quadrature(
    m1: int,
    m2: int,
    antisymmetrize: bool,
    separation: float,
    nodes: int = 12,
    angles: int = 32,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Brute-force transverse integral of a Landau pair against 1/sqrt(s^2 + |zeta_1 - zeta_2|^2).

    The wavefunction is built from the Landau monomials themselves. The
    centre-of-mass plane uses a tensor Gauss-Hermite rule, the relative
    angle a uniform rule, and the relative radius u = |R|^2 an adaptive
    Laguerre-weighted integral.

    Args:
        m1: First angular momentum
        m2: Second angular momentum
        antisymmetrize: Antisymmetrize the pair
        separation: Longitudinal separation s > 0
        nodes: Gauss-Hermite nodes per centre-of-mass coordinate
        angles: Uniform nodes for the relative angle
        spec: Tolerances of the radial integral

    Returns:
        The interaction energy of the pair at separation s
    """
    m1 = _check_momentum(m1, "m1")
    m2 = _check_momentum(m2, "m2")
    if antisymmetrize and m1 == m2:
        raise NullStateError(f"Antisymmetrized pair of identical states m = {m1} vanishes")
    if not separation > 0:
        raise DomainError(f"Separation must be positive, got {separation}")
    if angles <= 2 * (m1 + m2):
        raise DomainError(f"Need more than {2 * (m1 + m2)} angular nodes, got {angles}")

    t, w = np.polynomial.hermite.hermgauss(nodes)
    z_points = (t[:, None] + 1j * t[None, :]).ravel()
    z_weights = (w[:, None] * w[None, :]).ravel()
    phases = np.exp(2j * np.pi * np.arange(angles) / angles)
    norm = 1.0 / (math.pi**2 * factorial(m1) * factorial(m2))

    def density(u: float) -> float:
        # angular and centre-of-mass average of |F(Z, R)|^2 at |R|^2 = u
        R = math.sqrt(u) * phases
        zeta1 = (z_points[:, None] + R[None, :]) / math.sqrt(2.0)
        zeta2 = (z_points[:, None] - R[None, :]) / math.sqrt(2.0)
        amplitude = zeta1**m1 * zeta2**m2
        if antisymmetrize:
            amplitude = (amplitude - zeta1**m2 * zeta2**m1) / math.sqrt(2.0)
        plane = np.dot(z_weights, np.abs(amplitude) ** 2).mean()
        # d^2R = (1/2) du dtheta
        return float(math.pi * plane * norm)

    s2 = separation * separation

    def radial(u: float) -> float:
        return density(u) * math.exp(-u) / math.sqrt(s2 + 2.0 * u)

    result = integrate_semi_infinite(
        radial, spec or QuadratureSpec(rel_tol=1e-10), LaguerreWeight(float(m1 + m2))
    )
    if not result.converged:
        raise NonConvergenceError(
            f"Transverse quadrature for ({m1}, {m2}) at s = {separation} did not converge"
        )
    logger.debug("Transverse quadrature (%d, %d, s=%g): %d evaluations", m1, m2, separation, result.evaluations)
    return result.value
