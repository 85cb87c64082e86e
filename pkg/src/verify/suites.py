"""Verification suites for the V_m family and the effective models.

Each suite evaluates a set of properties on a grid and returns a
VerificationReport. Values of V_m are memoized per suite run.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from ..core.config import AppConfig
from ..core.errors import DomainError
from ..kernel.quadrature import QuadratureSpec
from ..models.delta import delta_mass, delta_pairing
from ..models.effective import EffectiveInteraction, slater_coefficients, slater_model, zero_model
from ..models.landau import pair_decomposition, transverse_interaction_quadrature
from ..potential.averaged import v_av, v_av_derivative, v_av_identity
from ..potential.bounds import G_k_m, bracket, g_k, large_x_bracket, ratio_bounds
from ..potential.evaluation import (
    Strategy,
    convexity_in_m_defect,
    v,
    v_asymptotic,
    v_at_zero,
    v_derivative,
    v_iterated,
    v_recursion_chain,
)
from ..potential.fourier import (
    fourier_v,
    fourier_v0_closed,
    fourier_v_direct,
    log_singularity_slope,
)
from ..potential.polynomials import (
    kummer_condition,
    pm_qm,
    pm_via_kummer,
    reconstruction_condition,
    v_polynomial,
)
from .report import VerificationReport

logger = logging.getLogger(__name__)

SUITES = ("bounds", "ode", "recursion", "convexity", "ratio", "fourier", "avg", "pairs", "delta")


@dataclass(frozen=True)
class SuiteGrid:
    """Grids shared by the suites."""

    m_values: Tuple[float, ...]
    integer_m: Tuple[int, ...]
    x_values: Tuple[float, ...]
    small_x: Tuple[float, ...]
    subadditive_m: Tuple[int, ...]
    subadditive_points: int
    probe_x: Tuple[float, ...] = (0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5)
    nonconvex_m: Tuple[int, ...] = (1, 2, 5)

    @classmethod
    def canonical(cls) -> "SuiteGrid":
        """m in {0, 0.5, ..., 20}, x log-spaced in [1e-3, 1e3]."""
        return cls(
            m_values=tuple(0.5 * i for i in range(41)),
            integer_m=tuple(range(21)),
            x_values=tuple(np.logspace(-3, 3, 25)),
            small_x=tuple(np.logspace(-3, math.log10(2.0), 12)),
            subadditive_m=(0, 1, 2, 5, 10, 20),
            subadditive_points=50,
        )

    @classmethod
    def quick(cls) -> "SuiteGrid":
        return cls(
            m_values=(0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0),
            integer_m=(0, 1, 2, 3, 5),
            x_values=tuple(np.logspace(-3, 3, 9)),
            small_x=(1e-3, 0.1, 0.5, 1.0, 2.0),
            subadditive_m=(0, 2),
            subadditive_points=8,
        )


@dataclass
class SuiteOptions:
    """Run-time options of a verification run."""

    grid: SuiteGrid = field(default_factory=SuiteGrid.canonical)
    spec: Optional[QuadratureSpec] = None
    perturb_upper: float = 0.0


class PotentialTable:
    """Memo of V_m(x) values for one suite run."""

    def __init__(self, spec: Optional[QuadratureSpec] = None):
        self.spec = spec
        self._values: Dict[Tuple[float, float], float] = {}

    def __call__(self, m: float, x: float) -> float:
        key = (float(m), float(x))
        if key not in self._values:
            if m == -1:
                self._values[key] = 1.0 / x
            else:
                self._values[key] = v(m, x, spec=self.spec).value
        return self._values[key]

    def __len__(self) -> int:
        return len(self._values)


def _describe(values, name: str) -> str:
    values = list(values)
    return f"{name} in [{min(values):.4g}, {max(values):.4g}] ({len(values)} points)"


# ----------------------------------------------------------------------------
# bounds
# ----------------------------------------------------------------------------


def suite_bounds(options: SuiteOptions) -> VerificationReport:
    """Brackets, monotonicity in m and x, scaling, large-x bounds, g_k and subadditivity."""
    grid = options.grid
    V = PotentialTable(options.spec)
    report = VerificationReport("bounds")
    slack = AppConfig.INEQUALITY_SLACK
    xs = grid.x_values
    grid_text = f"{_describe(grid.m_values, 'm')}; {_describe(xs, 'x')}"

    contain = report.check("a:bracket", grid_text, slack)
    for m in grid.m_values:
        if m <= 0:
            continue
        for x in xs:
            low, high = bracket(m, x)
            high += options.perturb_upper
            value = V(m, x)
            contain.record(max(low - value, value - high), m=m, x=x)

    decreasing_m = report.check("b:decreasing-in-m", grid_text, slack)
    below_coulomb = report.check("b:below-coulomb", grid_text, slack)
    increasing_mv = report.check("c:m-times-v-increasing", grid_text, slack)
    for m in grid.m_values:
        for x in xs:
            value = V(m, x)
            below_coulomb.record(value - 1.0 / x, m=m, x=x)
            for delta in (0.5, 1.0):
                if m + delta > max(grid.m_values):
                    continue
                decreasing_m.record(V(m + delta, x) - value, m=m, x=x, delta=delta)
                increasing_mv.record(m * value - (m + delta) * V(m + delta, x), m=m, x=x, delta=delta)

    decreasing_x = report.check("f:decreasing-in-x", grid_text, slack)
    scaling = report.check("g:a-v-ax-increasing", grid_text, slack)
    factors = (0.5, 1.0 / math.sqrt(2.0), 1.0, math.sqrt(2.0), 2.0)
    for m in grid.m_values:
        for left, right in zip(xs, xs[1:]):
            decreasing_x.record(V(m, right) - V(m, left), m=m, x=left)
        for x in xs[::2]:
            scaled = [a * V(m, a * x) for a in factors]
            for a, lower, upper in zip(factors, scaled, scaled[1:]):
                scaling.record(lower - upper, m=m, x=x, a=a)

    large = report.check("l:large-x-bracket", f"{_describe(grid.m_values, 'm')}; x >= 5", slack)
    for m in grid.m_values:
        for x in xs:
            if x < 5:
                continue
            gap = 1.0 / x - V(m, x)
            low, high = large_x_bracket(m, x)
            large.record(max(low - gap, gap - high) / (1.0 / x), m=m, x=x)

    shrink = report.check("l:asymptotic-error-shrinks", "m in {0, 1, 2}; x in {10, 20, 40}", 0.0)
    for m in (0.0, 1.0, 2.0):
        errors = []
        for x in (10.0, 20.0, 40.0):
            reference = v(m, x, method=Strategy.QUADRATURE, spec=options.spec).value
            errors.append(abs(v_asymptotic(m, x, 2).value - reference))
        for x, coarse, fine in zip((10.0, 20.0), errors, errors[1:]):
            shrink.record(2**5 * fine - coarse, m=m, x=x)

    g_bounds = report.check("g_k:pi-below-v0-below-4", _describe(xs, "x"), slack)
    for x in xs:
        value = V(0.0, x)
        g_bounds.record(max(g_k(x, math.pi) - value, value - g_k(x, 4.0)), x=x)

    points = grid.subadditive_points
    sub_x = np.logspace(-2, 2, points)
    sub = report.check(
        "subadditivity",
        f"m in {list(grid.subadditive_m)}; x, y log-spaced in [1e-2, 1e2] ({points}x{points})",
        slack,
    )
    for m in grid.subadditive_m:
        for i, x in enumerate(sub_x):
            for y in sub_x[i:]:
                lhs = 1.0 / V(m, x + y)
                rhs = 1.0 / V(m, x) + 1.0 / V(m, y)
                sub.record((lhs - rhs) / rhs, m=m, x=x, y=y)

    logger.debug("bounds suite used %d potential values", len(V))
    return report


# ----------------------------------------------------------------------------
# ode
# ----------------------------------------------------------------------------


def suite_ode(options: SuiteOptions) -> VerificationReport:
    """The derivative formula against central differences and its values at the origin."""
    grid = options.grid
    report = VerificationReport("ode")
    spec = options.spec
    xs = grid.x_values

    residual = report.check(
        "e:ode-residual", f"{_describe(grid.m_values, 'm')}; {_describe(xs, 'x')}", AppConfig.ODE_TOLERANCE
    )
    for m in grid.m_values:
        for x in xs:
            h = min(AppConfig.ODE_STEP, 0.01 * x)
            central = (v(m, x + h, spec=spec).value - v(m, x - h, spec=spec).value) / (2.0 * h)
            residual.record(abs(v_derivative(m, x, spec) - central), m=m, x=x)

    flat = report.check("h:flat-at-origin", "m > 1/2 on the m grid", 0.0)
    for m in grid.m_values:
        if m > 0.5:
            flat.record(abs(v_derivative(m, 0.0)), m=m)

    curvature = report.check("h:negative-curvature-at-origin", "m > 1/2 on the m grid", 0.0)
    for m in grid.m_values:
        if m > 0.5:
            # V_m''(0) = 2 (V_m(0) - V_{m-1}(0))
            curvature.record(2.0 * (v_at_zero(m) - v_at_zero(m - 1.0)), m=m)

    cusp = report.check("h:v0-slope-at-origin", "m = 0", 1e-6)
    h = 1e-4
    at_zero = v(0.0, 0.0).value
    coarse = (v(0.0, h).value - at_zero) / h
    fine = (v(0.0, 0.5 * h).value - at_zero) / (0.5 * h)
    cusp.record(abs(2.0 * fine - coarse - v_derivative(0.0, 0.0)), h=h)
    return report


# ----------------------------------------------------------------------------
# recursion
# ----------------------------------------------------------------------------


def suite_recursion(options: SuiteOptions) -> VerificationReport:
    """Recursion, iterated recursion, polynomial reconstruction and the Kummer form."""
    grid = options.grid
    report = VerificationReport("recursion")
    spec = options.spec
    ints = [m for m in grid.integer_m if m >= 1]
    grid_text = f"{_describe(ints, 'm')}; {_describe(grid.small_x, 'x')}"

    recursion = report.check("recursion-vs-quadrature", grid_text, AppConfig.IDENTITY_TOLERANCE)
    iterated = report.check("iterated-vs-recursion", grid_text, 1e-12)
    for m in ints:
        for x in grid.small_x:
            reference = v(float(m), x, method=Strategy.QUADRATURE, spec=spec).value
            chained = v_recursion_chain(float(m), x, spec).value
            recursion.record(abs(chained - reference) / reference, m=m, x=x)
            iterated.record(abs(v_iterated(m, x) - chained) / reference, m=m, x=x)

    fractional = report.check("recursion-real-m", "m in {1.5, 2.5, 3.5}; x in {0.5, 1, 2}", AppConfig.IDENTITY_TOLERANCE)
    for m in (1.5, 2.5, 3.5):
        for x in (0.5, 1.0, 2.0):
            reference = v(m, x, method=Strategy.QUADRATURE, spec=spec).value
            fractional.record(abs(v_recursion_chain(m, x, spec).value - reference) / reference, m=m, x=x)

    poly_x = [x for x in grid.small_x if x <= 1.0] + [0.0]
    poly = report.check(
        "polynomial-reconstruction", f"{_describe(ints, 'm')}; {_describe(poly_x, 'x')}", 1e-10
    )
    for m in ints:
        for x in poly_x:
            reference = v(float(m), x, method=Strategy.QUADRATURE, spec=spec).value
            poly.record(abs(v_polynomial(m, x).value - reference) / reference, m=m, x=x)

    origin = report.check("polynomial-at-origin", _describe(ints, "m"), 1e-13)
    for m in ints:
        p, _ = pm_qm(m)
        expected = v_at_zero(float(m)) / math.sqrt(math.pi)
        origin.record(abs(float(p.evaluate_exact(0)) - expected) / expected, m=m)

    kummer = report.check("kummer-vs-polynomial", f"{_describe(ints, 'm')}; y in [0, 400]", 1e-11)
    for m in ints:
        p, _ = pm_qm(m)
        for y in (0.0, 0.25, 1.0, 4.0, 25.0, 400.0):
            exact = float(p.evaluate_exact(Fraction(y)))
            scale = kummer_condition(m, y) * abs(exact) if exact else 1.0
            kummer.record(abs(pm_via_kummer(m, y) - exact) / scale, m=m, y=y)

    conditioning = {}
    for m in (5, 10, 20):
        if m in ints:
            conditioning[f"m={m}"] = {
                f"x={x:g}": reconstruction_condition(m, x) for x in (1.0, 3.0, 5.0)
            }
    report.explore(
        "polynomial-conditioning",
        "Cancellation factor of P_m(x^2) V_0 + x Q_{m-1}(x^2); reconstruction accuracy is about 1e-16 times it",
        **conditioning,
    )
    return report


# ----------------------------------------------------------------------------
# convexity
# ----------------------------------------------------------------------------


def _second_difference(f: Callable[[float], float], x: float) -> float:
    h = 0.05 * x
    centre = f(x)
    return (f(x + h) - 2.0 * centre + f(x - h)) / abs(centre)


def suite_convexity(options: SuiteOptions) -> VerificationReport:
    """Convexity of V_0 and 1/V_m, non-convexity of V_m near 0 for m > 1/2."""
    grid = options.grid
    V = PotentialTable(options.spec)
    report = VerificationReport("convexity")
    slack = AppConfig.CONVEXITY_SLACK
    xs = grid.x_values

    v0 = report.check("h:v0-convex", _describe(xs, "x"), slack)
    for x in xs:
        v0.record(-_second_difference(lambda t: V(0.0, t), x), x=x)

    inverse = report.check("i:inverse-convex", f"{_describe(grid.integer_m, 'm')}; {_describe(xs, 'x')}", slack)
    for m in grid.integer_m:
        for x in xs:
            inverse.record(-_second_difference(lambda t: 1.0 / V(float(m), t), x), m=m, x=x)

    # existential: each m needs one probe point with a negative second difference
    witness = report.check("h:nonconvex-witness", f"m in {list(grid.nonconvex_m)}; x in {list(grid.probe_x)}", 0.0)
    for m in grid.nonconvex_m:
        best = min(grid.probe_x, key=lambda x: _second_difference(lambda t: V(float(m), t), x))
        witness.record(_second_difference(lambda t: V(float(m), t), best), m=m, x=best)

    defects = {
        f"m={m:g}": {f"x={x:g}": convexity_in_m_defect(m, x, options.spec) for x in (0.1, 1.0, 10.0)}
        for m in (0.0, 1.0, 2.0, 5.0)
    }
    report.explore(
        "convexity-in-m",
        "V_{m+1} + V_{m-1} - 2 V_m; a negative entry would contradict convexity in m",
        **defects,
    )
    return report


# ----------------------------------------------------------------------------
# ratio
# ----------------------------------------------------------------------------


def suite_ratio(options: SuiteOptions) -> VerificationReport:
    """Monotone ratios V_{m+1}/V_m and the bounds G_8^{m-1} < V_m/V_{m-1} < G_4^m."""
    grid = options.grid
    V = PotentialTable(options.spec)
    report = VerificationReport("ratio")
    slack = AppConfig.INEQUALITY_SLACK
    xs = grid.x_values
    grid_text = f"{_describe(grid.integer_m, 'm')}; {_describe(xs, 'x')}"

    increasing = report.check("j:ratio-increasing", grid_text, slack)
    for m in grid.integer_m:
        if m + 1 > max(grid.integer_m):
            continue
        ratios = [V(m + 1.0, x) / V(float(m), x) for x in xs]
        for x, left, right in zip(xs, ratios, ratios[1:]):
            increasing.record(left - right, m=m, x=x)

    bounds = report.check("ratio-bounds", grid_text, slack)
    for m in grid.integer_m:
        for x in xs:
            ratio = V(float(m), x) / V(m - 1.0, x)
            low, high = ratio_bounds(m, x)
            bounds.record(max(low - ratio, ratio - high), m=m, x=x)

    origin = report.check("ratio-limit-at-origin", _describe([m for m in grid.integer_m if m >= 1], "m"), 0.0)
    for m in grid.integer_m:
        if m >= 1:
            origin.record((2 * m - 1) / (2 * m) - G_k_m(0.0, 4.0, float(m)), m=m)

    worst = {}
    for m in (0.5, 1.5, 2.5, 4.5):
        margins = []
        for x in (0.01, 0.1, 1.0, 10.0):
            ratio = V(m, x) / V(m - 1.0, x)
            margins.append(min(ratio - G_k_m(x * x, 8.0, m - 1.0), G_k_m(x * x, 4.0, m) - ratio))
        worst[f"m={m:g}"] = min(margins)
    report.explore(
        "ratio-bounds-real-m",
        "Smallest margin of G_8^{m-1} < V_m/V_{m-1} < G_4^m at half-integer m (negative means violated)",
        **worst,
    )
    return report


# ----------------------------------------------------------------------------
# fourier
# ----------------------------------------------------------------------------


def suite_fourier(options: SuiteOptions) -> VerificationReport:
    report = VerificationReport("fourier")
    spec = options.spec

    closed = report.check("k:m0-closed-form", "xi in {0.5, 1, 2, 5}", AppConfig.FOURIER_TOLERANCE)
    for xi in (0.5, 1.0, 2.0, 5.0):
        expected = fourier_v0_closed(xi)
        closed.record(abs(fourier_v(0.0, xi, spec) - expected) / expected, xi=xi)

    direct = report.check("k:direct-transform", "m in {0, 1, 2}; xi = 1", AppConfig.FOURIER_DIRECT_TOLERANCE)
    for m in (0.0, 1.0, 2.0):
        direct.record(abs(fourier_v_direct(m, 1.0) - fourier_v(m, 1.0, spec)), m=m, xi=1.0)

    even = report.check("k:even-positive", "m in {0, 0.5, 1, 3}; xi in {0.3, 3}", 0.0)
    for m in (0.0, 0.5, 1.0, 3.0):
        for xi in (0.3, 3.0):
            plus, minus = fourier_v(m, xi, spec), fourier_v(m, -xi, spec)
            even.record(max(abs(plus - minus), -plus), m=m, xi=xi)

    slope = report.check("k:log-singularity", "m = 0; xi in {1e-3, 1e-4}", 1e-3)
    expected_slope = -1.0 / math.sqrt(2.0 * math.pi)
    slope.record(abs(log_singularity_slope(0.0, 1e-3, 1e-4) - expected_slope), m=0.0)
    return report


# ----------------------------------------------------------------------------
# avg
# ----------------------------------------------------------------------------


def suite_avg(options: SuiteOptions) -> VerificationReport:
    """The V_av^N identity, its derivative, convexity and the cusp at the origin."""
    grid = options.grid
    spec = options.spec
    report = VerificationReport("avg")
    ns = (1, 2, 3, 4, 6, 8)
    xs = [x for x in grid.x_values if x <= 2.0]

    identity = report.check("avg:identity", f"N in {list(ns)}; {_describe(xs, 'x')}", 1e-11)
    for N in ns:
        for x in xs:
            value, scale = v_av_identity(N, x, spec)
            identity.record(abs(value - v_av(N, x, spec)) / scale, N=N, x=x)

    convex = report.check("avg:convex", f"N in {list(ns)}; {_describe(grid.x_values, 'x')}", AppConfig.CONVEXITY_SLACK)
    for N in ns:
        for x in grid.x_values:
            convex.record(-_second_difference(lambda t: v_av(N, t, spec), x), N=N, x=x)

    derivative = report.check("avg:derivative", f"N in {list(ns)}; x in {{0.1, 1, 5}}", AppConfig.ODE_TOLERANCE)
    for N in ns:
        for x in (0.1, 1.0, 5.0):
            h = 1e-4
            central = (v_av(N, x + h, spec) - v_av(N, x - h, spec)) / (2.0 * h)
            derivative.record(abs(v_av_derivative(N, x, spec) - central), N=N, x=x)

    cusp = report.check("avg:cusp-slope", f"N in {list(ns)}", 1e-6)
    for N in ns:
        h = 1e-4
        at_zero = v_av(N, 0.0, spec)

        def one_sided(step: float) -> float:
            return (v_av(N, step, spec) - at_zero) / step

        # Richardson: removes the O(h) term of the one-sided difference
        slope = 2.0 * one_sided(0.5 * h) - one_sided(h)
        cusp.record(abs(slope + 2.0 / N), N=N)

    origin = report.check("avg:origin-decreasing-in-N", "N in 1..8", 0.0)
    values = [v_av(N, 0.0, spec) for N in range(1, 9)]
    for N, here, after in zip(range(1, 9), values, values[1:]):
        origin.record(after - here, N=N)
    return report


# ----------------------------------------------------------------------------
# pairs
# ----------------------------------------------------------------------------

ORACLE_PAIRS = ((0, 1, True), (0, 2, True), (1, 2, True), (1, 1, False), (2, 2, False))
ORACLE_SEPARATIONS = (1.0, 1.5, 2.0, 3.0, 5.0, 8.0)


def suite_pairs(options: SuiteOptions) -> VerificationReport:
    """Normalization, parity and quadrature oracle of pair decompositions and Slater weights."""
    report = VerificationReport("pairs")
    spec = options.spec

    structure = report.check("pairs:normalized-parity", "m1, m2 in 0..5, product and antisymmetrized", 0.0)
    for m1 in range(6):
        for m2 in range(6):
            for anti in (False, True):
                if anti and m1 == m2:
                    continue
                pair = pair_decomposition(m1, m2, anti)
                violation = float(abs(sum(w for _, w in pair.exact) - 1))
                if any(w <= 0 for _, w in pair.exact):
                    violation = max(violation, 1.0)
                if anti and any(k % 2 == 0 for k in pair.indices):
                    violation = max(violation, 1.0)
                if not anti and m1 == m2 and any(k % 2 for k in pair.indices):
                    violation = max(violation, 1.0)
                structure.record(violation, m1=m1, m2=m2, antisymmetrized=float(anti))

    single = report.check("pairs:(0,1)-antisymmetrized", "exact weights", 0.0)
    single.record(0.0 if pair_decomposition(0, 1, True).as_dict() == {1: Fraction(1)} else 1.0)

    oracle = report.check(
        "pairs:quadrature-oracle",
        f"pairs {[p[:2] for p in ORACLE_PAIRS]}; s in {list(ORACLE_SEPARATIONS)}",
        1e-6,
    )
    for m1, m2, anti in ORACLE_PAIRS:
        interaction = EffectiveInteraction(pair_decomposition(m1, m2, anti).weights)
        for s in ORACLE_SEPARATIONS:
            expected = interaction(s, spec)
            brute = transverse_interaction_quadrature(m1, m2, anti, s)
            oracle.record(abs(brute - expected) / expected, m1=m1, m2=m2, s=s)

    slater = report.check("slater:weights", "N in 2..6", 1e-12)
    for N in range(2, 7):
        weights = slater_coefficients(N)
        floats = [float(w) for _, w in weights]
        violation = abs(math.fsum(floats) - 1.0)
        if min(floats) <= 0:
            violation = 1.0
        if any(k % 2 == 0 or k > 2 * N - 1 for k, _ in weights):
            violation = 1.0
        slater.record(violation, N=N)

    beyond = report.check("slater:indices-above-N", "N in 4..6", 0.0)
    for N in range(4, 7):
        top = max(k for k, _ in slater_coefficients(N))
        beyond.record(float(N - top + 1) if top <= N else 0.0, N=N, top=top)

    tail = report.check("models:coulomb-tail", "x = 1e3; zero and Slater N in 2..4", 1e-5)
    x = 1e3
    tail.record(abs(zero_model(2)[1](x, spec) * x - 1.0), N=1)
    for N in (2, 3, 4):
        tail.record(abs(slater_model(N)[1](x, spec) * x - 1.0), N=N)

    factor = report.check("models:zero-ratio-at-origin", "x = 0", 1e-15)
    attraction, interaction = zero_model(1)
    factor.record(abs(interaction(0.0) / attraction(0.0) - 1.0 / math.sqrt(2.0)))

    ratios = {}
    for N in range(2, 7):
        attraction, interaction = slater_model(N)
        ratios[f"N={N}"] = interaction(0.0, spec) / attraction(0.0, spec)
    report.explore(
        "slater-interaction-decrease",
        "W(0)/V(0) for the Slater model; values below 1/sqrt(2) = 0.7071 support the expected decrease",
        **ratios,
    )
    report.explore(
        "slater-weights",
        "Exact c_k of the Slater interaction",
        **{f"N={N}": {str(k): str(w) for k, w in slater_coefficients(N)} for N in range(2, 5)},
    )
    return report


# ----------------------------------------------------------------------------
# delta
# ----------------------------------------------------------------------------

DELTA_BANDS = ((1e2, 0.35), (1e4, 0.20), (1e6, 0.12))


def suite_delta(options: SuiteOptions) -> VerificationReport:
    report = VerificationReport("delta")

    bands = report.check("delta:gaussian-bands", "m = 0; beta in {1e2, 1e4, 1e6}", 0.0)
    pairings = []
    for beta, band in DELTA_BANDS:
        value = delta_pairing(0.0, beta)
        pairings.append(value)
        bands.record(abs(value - 1.0) - band, beta=beta, value=value)

    monotone = report.check("delta:monotone", "m = 0; beta in {1e2, 1e4, 1e6}", 0.0)
    for (beta, _), here, after in zip(DELTA_BANDS, pairings, pairings[1:]):
        monotone.record(abs(after - 1.0) - abs(here - 1.0), beta=beta)

    zero = report.check("delta:zero-test-function", "beta = 1e4", 0.0)
    zero.record(abs(delta_pairing(0.0, 1e4, lambda x: 0.0)))

    stable = report.check("delta:mass-stable", "m = 0; beta in {1e4, 1e6}", 0.10)
    low, high = delta_mass(0.0, 1e4), delta_mass(0.0, 1e6)
    stable.record(abs(high - low) / high, low=low, high=high)

    report.explore("delta-mass", "Mass of the scaled potential on |x| <= 1; tends to 2", beta_1e4=low, beta_1e6=high)
    return report


SUITE_FUNCTIONS: Dict[str, Callable[[SuiteOptions], VerificationReport]] = {
    "bounds": suite_bounds,
    "ode": suite_ode,
    "recursion": suite_recursion,
    "convexity": suite_convexity,
    "ratio": suite_ratio,
    "fourier": suite_fourier,
    "avg": suite_avg,
    "pairs": suite_pairs,
    "delta": suite_delta,
}


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> VerificationReport:
    """
    Run one suite by name, or every suite for "all".

    Raises:
        DomainError: For an unknown suite name
    """
    options = options or SuiteOptions()
    if name == "all":
        combined = VerificationReport("all")
        for suite in SUITES:
            logger.debug("Running suite %s", suite)
            combined.merge(SUITE_FUNCTIONS[suite](options))
        return combined
    if name not in SUITE_FUNCTIONS:
        raise DomainError(f"Unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITE_FUNCTIONS[name](options)
