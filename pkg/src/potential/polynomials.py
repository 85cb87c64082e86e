"""Exact polynomials P_m, Q_m with V_m(x) = P_m(x^2) V_0(x) + x Q_{m-1}(x^2)."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Tuple, Union

from ..core.errors import DomainError
from ..kernel.special import betafn, kummer_terminating_terms
from .evaluation import EvalResult, Strategy, v, v_closed_m0

Scalar = Union[int, Fraction]


def _strip(coefficients: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    coefs = [Fraction(c) for c in coefficients] or [Fraction(0)]
    while len(coefs) > 1 and coefs[-1] == 0:
        coefs.pop()
    return tuple(coefs)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in y with exact rational coefficients, lowest power first."""

    coefficients: Tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[Scalar]):
        object.__setattr__(self, "coefficients", _strip(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (Fraction(0),)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        padded_a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        padded_b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return RationalPolynomial(a + b for a, b in zip(padded_a, padded_b))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> "RationalPolynomial":
        """Multiply every coefficient by an exact rational."""
        if not isinstance(factor, Rational):
            raise DomainError(f"Scaling factor must be rational, got {factor!r}")
        return RationalPolynomial(Fraction(factor) * c for c in self.coefficients)

    def times_y(self) -> "RationalPolynomial":
        """Multiply by the indeterminate y."""
        if self.is_zero():
            return self
        return RationalPolynomial((Fraction(0),) + self.coefficients)

    def __mul__(self, other: Union[Scalar, "RationalPolynomial"]) -> "RationalPolynomial":
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def evaluate_exact(self, y: Scalar) -> Fraction:
        """Horner evaluation at a rational point, with no rounding."""
        y = Fraction(y)
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * y + c
        return total

    def __call__(self, y: float) -> float:
        total = 0.0
        for c in reversed(self.coefficients):
            total = total * y + float(c)
        return total

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coefficients):
            if c == 0 and self.degree > 0:
                continue
            monomial = "" if power == 0 else ("y" if power == 1 else f"y^{power}")
            parts.append(f"{c}{'*' + monomial if monomial else ''}")
        return " + ".join(parts)


_ONE = RationalPolynomial([1])
_ZERO = RationalPolynomial([0])


@lru_cache(maxsize=None)
def _pair(m: int) -> Tuple[RationalPolynomial, RationalPolynomial, RationalPolynomial, RationalPolynomial]:
    """(P_m, P_{m-1}, R_m, R_{m-1}) where R_m = Q_{m-1}; R_0 = 0, R_1 = 1."""
    if m == 1:
        return RationalPolynomial([Fraction(1, 2), -1]), _ONE, _ONE, _ZERO

    p_prev, p_before, r_prev, r_before = _pair(m - 1)
    shift = RationalPolynomial([Fraction(2 * m - 1, 2)])

    def step(previous: RationalPolynomial, before: RationalPolynomial) -> RationalPolynomial:
        # (1/m) [(m - 1/2 - y) previous + y before]
        combined = shift * previous - previous.times_y() + before.times_y()
        return combined.scale(Fraction(1, m))

    return step(p_prev, p_before), p_prev, step(r_prev, r_before), r_prev


def _check_order(m: int) -> int:
    if not float(m).is_integer() or m < 1:
        raise DomainError(f"P_m and Q_m are defined for integer m >= 1, got {m}")
    return int(m)


def pm_qm(m: int) -> Tuple[RationalPolynomial, RationalPolynomial]:
    """
    The pair (P_m, Q_{m-1}) built from the three-term recursion with exact rationals.

    Args:
        m: Integer order, m >= 1

    Returns:
        (P_m, Q_{m-1}); deg P_m = m
    """
    m = _check_order(m)
    p, _, r, _ = _pair(m)
    return p, r


def v_polynomial(m: int, x: float) -> EvalResult:
    """V_m(x) reconstructed as P_m(x^2) V_0(x) + x Q_{m-1}(x^2)."""
    m = _check_order(m)
    if x < 0:
        raise DomainError(f"Polynomial reconstruction is evaluated at x >= 0, got {x}")
    p, q = pm_qm(m)
    y = Fraction(x) ** 2
    p_value = float(p.evaluate_exact(y))
    q_value = float(q.evaluate_exact(y))
    v0 = v_closed_m0(x)
    value = p_value * v0 + x * q_value
    scale = abs(p_value) * v0 + x * abs(q_value)
    return EvalResult(
        value=value,
        error_estimate=8.0 * 2.2e-16 * scale,
        strategy=Strategy.POLYNOMIAL,
        diagnostics={"condition": scale / abs(value) if value else math.inf},
    )


def reconstruction_condition(m: int, x: float) -> float:
    """(|P_m(x^2)| V_0 + x |Q_{m-1}(x^2)|) / V_m: the cancellation factor of the reconstruction."""
    p, q = pm_qm(m)
    y = x * x
    scale = abs(p(y)) * v_closed_m0(x) + x * abs(q(y))
    return scale / v(float(m), x).value


def pm_via_kummer(m: int, y: float) -> float:
    """
    P_m(y) = [1 / (m B(m, 1/2))] 1F1(-m; 1/2 - m; -y).

    This is the Kummer transform of e^{-y} 1F1(1/2; 1/2 - m; y) to a
    terminating series.
    """
    m = _check_order(m)
    if y < 0:
        raise DomainError(f"Kummer form is evaluated at y >= 0, got {y}")
    terms = kummer_terminating_terms(-m, 0.5 - m, -y)
    return math.fsum(terms) / (m * betafn(m, 0.5))


def kummer_condition(m: int, y: float) -> float:
    """Sum of |terms| over |sum| for the terminating series behind pm_via_kummer."""
    m = _check_order(m)
    terms = kummer_terminating_terms(-m, 0.5 - m, -y)
    total = abs(math.fsum(terms))
    return math.fsum(abs(t) for t in terms) / total if total else math.inf
