"""Algebraic bounds on V_m and on the ratios V_m / V_{m-1}."""

import math
from dataclasses import dataclass
from typing import Tuple

from ..core.errors import DomainError


@dataclass(frozen=True)
class RatioBoundParams:
    """Parameters (k, m) of the bound G_k^m; k = 4 and k = 8 are the certified pair."""

    k: float
    m: float

    def __post_init__(self) -> None:
        if not self.k > 1:
            raise DomainError(f"Ratio bound requires k > 1, got {self.k}")
        if self.m < -1:
            raise DomainError(f"Ratio bound requires m >= -1, got {self.m}")

    def __call__(self, y: float) -> float:
        return G_k_m(y, self.k, self.m)


def bracket(m: float, x: float) -> Tuple[float, float]:
    """
    Bounds 1/sqrt(x^2 + m + 1) < V_m(x) < 1/sqrt(x^2 + m).

    Args:
        m: Order, m > -1 (the upper bound needs m > 0)
        x: Abscissa, x >= 0

    Returns:
        (lower, upper); upper is +inf when m <= 0
    """
    if not m > -1:
        raise DomainError(f"Bracket requires m > -1, got {m}")
    if x < 0:
        raise DomainError(f"Bracket is stated for x >= 0, got {x}")
    x2 = x * x
    lower = 1.0 / math.sqrt(x2 + m + 1.0)
    upper = 1.0 / math.sqrt(x2 + m) if m > 0 else math.inf
    return lower, upper


def large_x_bracket(m: float, x: float) -> Tuple[float, float]:
    """Bounds m / (2 (x^2 + m)^{3/2}) <= 1/x - V_m(x) < (m + 1) / (2 x^3), for x > 0."""
    if not x > 0:
        raise DomainError(f"Large-x bracket requires x > 0, got {x}")
    if m < 0:
        raise DomainError(f"Large-x bracket requires m >= 0, got {m}")
    return m / (2.0 * (x * x + m) ** 1.5), (m + 1.0) / (2.0 * x**3)


def g_k(x: float, k: float) -> float:
    """g_k(x) = k / ((k - 1) x + sqrt(x^2 + k)); g_pi <= V_0 < g_4 on x > 0."""
    if not k > 1:
        raise DomainError(f"g_k requires k > 1, got {k}")
    if x < 0:
        raise DomainError(f"g_k is stated for x >= 0, got {x}")
    return k / ((k - 1.0) * x + math.sqrt(x * x + k))


def G_k_m(y: float, k: float, m: float) -> float:
    """
    G_k^m(y) = k y / ((k - 1) y - m + sqrt((y + m)^2 + k y)).

    G_8^{m-1}(x^2) and G_4^m(x^2) bound V_m(x) / V_{m-1}(x) from below and
    above for integer m >= 0 and x > 0. At y = 0 the limit 2m / (2m + 1)
    is returned for m > 0 (the formula is 0/0 there).
    """
    if not k > 1:
        raise DomainError(f"G_k^m requires k > 1, got {k}")
    if y < 0:
        raise DomainError(f"G_k^m is stated for y >= 0, got {y}")
    if y == 0:
        return 2.0 * m / (2.0 * m + 1.0) if m > 0 else 0.0

    root = math.sqrt((y + m) ** 2 + k * y)
    if m > 0:
        # sqrt(A) - m rewritten without cancellation
        shifted = y * (y + 2.0 * m + k) / (root + m)
    else:
        shifted = root - m
    return k * y / ((k - 1.0) * y + shifted)


def ratio_bounds(m: int, x: float) -> Tuple[float, float]:
    """(G_8^{m-1}(x^2), G_4^m(x^2)), the bracket for V_m(x) / V_{m-1}(x)."""
    if m < 0:
        raise DomainError(f"Ratio bounds are stated for m >= 0, got {m}")
    if not x > 0:
        raise DomainError(f"Ratio bounds are stated for x > 0, got {x}")
    y = x * x
    return G_k_m(y, 8.0, m - 1.0), G_k_m(y, 4.0, float(m))
