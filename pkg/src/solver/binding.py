"""Binding probes and benchmarks built on the ground-state solver."""

import logging
import math
from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from ..core.config import AppConfig
from ..core.errors import DomainError
from ..kernel.quadrature import QuadratureSpec
from ..models.delta import delta_scaled
from ..models.effective import FieldConfig, ModelKind, hamiltonian_params
from .eigen import GroundStateResult, ground_state
from .grid import Grid1D, potential_cell_average
from .operators import build_one_particle, build_two_particle_bosonic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BindingResult:
    """Outcome of a binding probe; truthy iff the N-th electron is bound."""

    bound: bool
    N: int
    energy: float
    reference_energy: float
    margin: float
    boundary_sensitivity: float
    residual: float
    iterations: int

    def __bool__(self) -> bool:
        return self.bound


def solve_model(
    config: FieldConfig,
    model: Union[str, ModelKind],
    grid: Grid1D,
    tol: float = AppConfig.SOLVER_TOL,
    spec: Optional[QuadratureSpec] = None,
    max_points: int = AppConfig.MAX_TWO_PARTICLE_POINTS,
) -> GroundStateResult:
    """Ground state of h(N, Z, M) for N = 1 or 2 on the given grid."""
    params = hamiltonian_params(config, model)
    if config.N == 1:
        op = build_one_particle(grid, config, params, spec=spec)
    elif config.N == 2:
        op = build_two_particle_bosonic(grid, config, params, max_points=max_points, spec=spec)
    else:
        raise DomainError(f"Exact diagonalization is limited to N <= 2, got N = {config.N}")
    return ground_state(op, tol)


def boundary_sensitivity(
    config: FieldConfig,
    model: Union[str, ModelKind],
    grid: Grid1D,
    energy: float,
    tol: float = AppConfig.SOLVER_TOL,
    spec: Optional[QuadratureSpec] = None,
    max_points: int = AppConfig.MAX_TWO_PARTICLE_POINTS,
) -> float:
    """|E(L) - E(1.5 L)| at the same spacing."""
    wider = grid.widened(AppConfig.BOUNDARY_SCALE)
    if config.N == 2 and wider.points > max_points:
        logger.warning("Boundary check skipped: %d points exceed the two-particle cap", wider.points)
        return math.nan
    widened = solve_model(config, model, wider, tol, spec, max_points)
    sensitivity = abs(energy - widened.energy)
    if sensitivity > 10.0 * tol:
        logger.warning("Energy moves by %.3g when L grows to %g", sensitivity, wider.half_width)
    return sensitivity


def binding_check(
    config: FieldConfig,
    model: Union[str, ModelKind],
    N: int,
    grid: Optional[Grid1D] = None,
    tol: float = AppConfig.SOLVER_TOL,
    spec: Optional[QuadratureSpec] = None,
) -> BindingResult:
    """
    Whether E_0(N) < E_0(N - 1) - 10 tol, with E_0(0) = 0.

    Args:
        config: Field configuration (its N is replaced by the probed N)
        model: "zero" or "slater"
        N: 1 or 2
        grid: Grid; defaults to the N-dependent defaults of AppConfig
        tol: Eigen residual tolerance
        spec: Quadrature tolerances

    Returns:
        BindingResult with both energies and the boundary sensitivity
    """
    if N not in (1, 2):
        raise DomainError(f"Binding check supports N in {{1, 2}}, got {N}")
    if grid is None:
        points = AppConfig.GRID_POINTS if N == 1 else AppConfig.GRID_POINTS_TWO
        grid = Grid1D(AppConfig.DEFAULT_HALF_WIDTH, points)

    probe = solve_model(replace(config, N=N), model, grid, tol, spec)
    if N == 1:
        reference = 0.0
    else:
        reference = solve_model(replace(config, N=1), model, grid, tol, spec).energy

    margin = 10.0 * tol
    sensitivity = boundary_sensitivity(replace(config, N=N), model, grid, probe.energy, tol, spec)
    result = BindingResult(
        bound=probe.energy < reference - margin,
        N=N,
        energy=probe.energy,
        reference_energy=reference,
        margin=margin,
        boundary_sensitivity=sensitivity,
        residual=probe.residual,
        iterations=probe.iterations,
    )
    logger.debug("Binding N=%d: E=%.10g vs %.10g -> %s", N, probe.energy, reference, result.bound)
    return result


def delta_well_benchmark(M: float, Z: float, grid: Grid1D, tol: float = AppConfig.SOLVER_TOL) -> float:
    """
    Ground energy of -(1/M) d^2/dx^2 - Z delta(x), the delta as weight Z/h on the centre node.

    Tends to -M Z^2 / 4 as h -> 0.
    """
    if not M > 0:
        raise DomainError(f"Mass must be positive, got {M}")
    potential = np.zeros(grid.dimension)
    potential[grid.centre_index] = -Z / grid.spacing
    config = FieldConfig(1, Z, 1.0 / (M * M))
    op = build_one_particle(grid, config, ModelKind.ZERO, potential=potential)
    return ground_state(op, tol).energy


def suggest_half_width(config: FieldConfig, model: Union[str, ModelKind]) -> float:
    """
    Smallest L with |Z V(L)| < 1e-3 |E_est|, E_est = -M Z^2 / 4, clipped to the allowed range.
    """
    if config.Z == 0:
        return AppConfig.DEFAULT_HALF_WIDTH
    params = hamiltonian_params(config, model)
    threshold = 1e-3 * config.M * config.Z**2 / 4.0
    L = AppConfig.DEFAULT_HALF_WIDTH
    while L < AppConfig.MAX_HALF_WIDTH and abs(params.potential(L)) >= threshold:
        L *= 1.25
    return min(max(L, AppConfig.DEFAULT_HALF_WIDTH), AppConfig.MAX_HALF_WIDTH)


def scaled_delta_well(
    M: float,
    Z: float,
    beta: float,
    grid: Grid1D,
    m: float = 0.0,
    tol: float = AppConfig.SOLVER_TOL,
    spec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Ground energy with the delta replaced by (1/2)(beta / log beta) V_m(beta |x|).

    The scaled potential is cell-averaged; its core of width 1/beta sits
    well below the grid spacing once beta is large. Its mass exceeds 1 at
    finite beta, so the energy lies below delta_well_benchmark(M, Z, grid)
    and approaches it from below as beta grows.
    """
    if not M > 0:
        raise DomainError(f"Mass must be positive, got {M}")
    averages = potential_cell_average(lambda x: 0.5 * delta_scaled(m, beta, x), grid, spec)
    config = FieldConfig(1, Z, 1.0 / (M * M))
    op = build_one_particle(grid, config, ModelKind.ZERO, potential=-Z * averages)
    energy = ground_state(op, tol).energy
    logger.debug("Scaled delta well (beta = %g): E = %.10g", beta, energy)
    return energy
