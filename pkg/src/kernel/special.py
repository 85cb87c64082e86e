"""Scalar special functions with domain checking.

Thin wrappers over ``scipy.special`` that reject poles and out-of-domain
arguments with DomainError instead of returning inf/nan, plus the
terminating Kummer series used by the P_m identity.
"""

import math
from typing import List

from scipy import special

from ..core.errors import DomainError


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gammafn(x: float) -> float:
    """Gamma function; raises DomainError at the poles 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise DomainError(f"Gamma function has a pole at x = {x}")
    return float(special.gamma(x))


def log_gammafn(x: float) -> float:
    """Logarithm of |Gamma(x)|; raises DomainError at the poles."""
    if _is_nonpositive_integer(x):
        raise DomainError(f"log-Gamma has a pole at x = {x}")
    return float(special.gammaln(x))


def betafn(m: float, n: float) -> float:
    """Beta function B(m, n) = Gamma(m) Gamma(n) / Gamma(m + n) for m, n > 0."""
    if m <= 0 or n <= 0:
        raise DomainError(f"Beta function requires positive arguments, got ({m}, {n})")
    return float(special.beta(m, n))


def erfcx(x: float) -> float:
    """Scaled complementary error function exp(x^2) erfc(x) for x >= 0."""
    if x < 0:
        raise DomainError(f"erfcx is used on x >= 0 only, got {x}")
    return float(special.erfcx(x))


def exp_integral_e1(x: float) -> float:
    """Exponential integral E1(x) for x > 0."""
    if x <= 0:
        raise DomainError(f"E1 requires x > 0, got {x}")
    return float(special.exp1(x))


def kummer_terminating_terms(a: float, b: float, y: float) -> List[float]:
    """
    Terms of the terminating confluent hypergeometric series 1F1(a; b; y).

    Args:
        a: Non-positive integer numerator parameter
        b: Denominator parameter; its Pochhammer symbol must not vanish
            before the series terminates
        y: Argument

    Returns:
        The 1 - a terms (a)_k / (b)_k * y^k / k!, k = 0..-a

    Raises:
        DomainError: If a is not a non-positive integer or (b)_k hits zero
    """
    if not _is_nonpositive_integer(a):
        raise DomainError(f"Series terminates only for non-positive integer a, got {a}")

    n_terms = int(-a) + 1
    terms = [1.0]
    term = 1.0
    for k in range(1, n_terms):
        denominator = b + k - 1
        if denominator == 0:
            raise DomainError(f"Pochhammer (b)_k vanishes for b = {b}, k = {k}")
        term *= (a + k - 1) / denominator * y / k
        terms.append(term)
    return terms


def kummer_terminating(a: float, b: float, y: float) -> float:
    """Terminating 1F1(a; b; y), summed with math.fsum."""
    return math.fsum(kummer_terminating_terms(a, b, y))
