"""Finite-difference discretizations of h(N, Z, M) for N = 1 and bosonic N = 2."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Union

import numpy as np
from scipy import sparse

from ..core.config import AppConfig
from ..core.errors import DomainError, MemoryGuardError
from ..kernel.quadrature import QuadratureSpec
from ..models.effective import FieldConfig, HamiltonianParams, ModelKind, hamiltonian_params
from .grid import Grid1D

logger = logging.getLogger(__name__)


@dataclass
class DiscreteOperator:
    """A sparse symmetric matrix with the grid and model it discretizes."""

    matrix: sparse.csr_matrix
    grid: Grid1D
    particles: int
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def asymmetry(self) -> float:
        """max |H_ij - H_ji|."""
        difference = self.matrix - self.matrix.T
        return float(abs(difference).max()) if difference.nnz else 0.0

    def gershgorin_lower(self) -> float:
        """Lower bound of the spectrum from Gershgorin discs."""
        diagonal = self.matrix.diagonal()
        radius = np.asarray(abs(self.matrix).sum(axis=1)).ravel() - np.abs(diagonal)
        return float(np.min(diagonal - radius))


def kinetic_matrix(grid: Grid1D, mass: float) -> sparse.csr_matrix:
    """-(1/M) d^2/dx^2 by second-order central differences on the interior nodes."""
    if not mass > 0:
        raise DomainError(f"Mass must be positive, got {mass}")
    n = grid.dimension
    scale = 1.0 / (mass * grid.spacing**2)
    main = np.full(n, 2.0 * scale)
    off = np.full(n - 1, -scale)
    return sparse.diags([off, main, off], [-1, 0, 1], format="csr")


def _resolve(
    config: FieldConfig, model: Union[str, ModelKind, HamiltonianParams]
) -> HamiltonianParams:
    if isinstance(model, HamiltonianParams):
        return model
    return hamiltonian_params(config, model)


def build_one_particle(
    grid: Grid1D,
    config: FieldConfig,
    model: Union[str, ModelKind, HamiltonianParams] = ModelKind.ZERO,
    potential: Optional[np.ndarray] = None,
    spec: Optional[QuadratureSpec] = None,
) -> DiscreteOperator:
    """
    One-particle operator -(1/M) d^2/dx^2 - Z V(x) with Dirichlet ends at +-L.

    Args:
        grid: The grid
        config: Field configuration (supplies Z and M)
        model: Model kind or a prepared HamiltonianParams
        potential: Optional values on the interior nodes replacing -Z V(x_i)
        spec: Quadrature tolerances for V

    Returns:
        DiscreteOperator of dimension n - 2
    """
    params = _resolve(config, model)
    if potential is None:
        potential = params.potential(grid.interior, spec)
    potential = np.asarray(potential, dtype=float)
    if potential.shape != (grid.dimension,):
        raise DomainError(f"Potential must have {grid.dimension} interior values, got {potential.shape}")

    kinetic = kinetic_matrix(grid, config.M)
    matrix = (kinetic + sparse.diags(potential, format="csr")).tocsr()
    matrix = (0.5 * (matrix + matrix.T)).tocsr()
    logger.debug("One-particle operator: dimension %d, h = %g", grid.dimension, grid.spacing)
    return DiscreteOperator(
        matrix=matrix,
        grid=grid,
        particles=1,
        metadata={
            "model": params.model.value,
            "Z": config.Z,
            "M": config.M,
            "kinetic_diagonal": 2.0 / (config.M * grid.spacing**2),
        },
    )


def symmetric_isometry(n: int) -> sparse.csr_matrix:
    """Isometry S from pairs i <= j onto the swap-symmetric subspace of R^n (x) R^n."""
    rows, cols, vals = [], [], []
    column = 0
    root_half = np.sqrt(0.5)
    for i in range(n):
        rows.append(i * n + i)
        cols.append(column)
        vals.append(1.0)
        column += 1
        for j in range(i + 1, n):
            rows.extend([i * n + j, j * n + i])
            cols.extend([column, column])
            vals.extend([root_half, root_half])
            column += 1
    return sparse.csr_matrix((vals, (rows, cols)), shape=(n * n, column))


def build_two_particle_bosonic(
    grid: Grid1D,
    config: FieldConfig,
    model: Union[str, ModelKind, HamiltonianParams] = ModelKind.ZERO,
    with_interaction: bool = True,
    max_points: int = AppConfig.MAX_TWO_PARTICLE_POINTS,
    spec: Optional[QuadratureSpec] = None,
) -> DiscreteOperator:
    """
    Two-particle operator on the symmetric subspace.

    S^T (T x I + I x T + V x I + I x V + W) S with W(x_i - x_j) on the
    diagonal; the result is symmetrized as (H + H^T)/2.

    Raises:
        MemoryGuardError: If the grid has more than ``max_points`` points
    """
    if grid.points > max_points:
        raise MemoryGuardError(
            f"Two-particle grid of {grid.points} points exceeds the cap of {max_points}"
        )
    params = _resolve(config, model)
    if params.config.N != 2:
        params = hamiltonian_params(FieldConfig(2, config.Z, config.B), params.model)

    n = grid.dimension
    x = grid.interior
    one_body = kinetic_matrix(grid, config.M) + sparse.diags(params.potential(x, spec))
    identity = sparse.identity(n, format="csr")
    full = sparse.kron(one_body, identity) + sparse.kron(identity, one_body)
    if with_interaction:
        separations = (x[:, None] - x[None, :]).ravel()
        full = full + sparse.diags(params.pair(separations, spec))

    isometry = symmetric_isometry(n)
    reduced = (isometry.T @ full.tocsr() @ isometry).tocsr()
    reduced = (0.5 * (reduced + reduced.T)).tocsr()
    logger.debug("Two-particle operator: %d symmetric pairs from %d nodes", reduced.shape[0], n)
    return DiscreteOperator(
        matrix=reduced,
        grid=grid,
        particles=2,
        metadata={
            "model": params.model.value,
            "Z": config.Z,
            "M": config.M,
            "interaction": with_interaction,
            "kinetic_diagonal": 4.0 / (config.M * grid.spacing**2),
        },
    )


def pair_vector_to_grid(vector: np.ndarray, n: int) -> np.ndarray:
    """Expand a symmetric-subspace vector into the n x n grid function."""
    return (symmetric_isometry(n) @ vector).reshape(n, n)
