"""Lowest eigenpair of a DiscreteOperator."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg, sparse
from scipy.sparse import linalg as spla

from ..core.config import AppConfig
from ..core.errors import DomainError, NonConvergenceError
from .operators import DiscreteOperator

logger = logging.getLogger(__name__)

# ARPACK needs a few more rows than requested vectors
_DENSE_BELOW = 16


@dataclass(frozen=True)
class GroundStateResult:
    """Lowest eigenvalue, its normalized vector and the achieved residual."""

    energy: float
    eigvec: np.ndarray
    residual: float
    iterations: int
    method: str


def rayleigh_quotient(op: DiscreteOperator, vector: np.ndarray) -> float:
    """<v, H v> / <v, v>; never below the lowest eigenvalue."""
    vector = np.asarray(vector, dtype=float)
    norm = float(vector @ vector)
    if norm == 0:
        raise DomainError("Rayleigh quotient of the zero vector")
    return float(vector @ (op.matrix @ vector)) / norm


def _finish(op: DiscreteOperator, vector: np.ndarray, iterations: int, method: str, tol: float) -> GroundStateResult:
    vector = np.asarray(vector, dtype=float).ravel()
    vector = vector / np.linalg.norm(vector)
    # fix the sign so repeated runs return the same vector
    if vector[np.argmax(np.abs(vector))] < 0:
        vector = -vector
    energy = float(vector @ (op.matrix @ vector))
    residual = float(np.linalg.norm(op.matrix @ vector - energy * vector))
    logger.debug("Ground state (%s): E = %.12g, residual %.3g, %d iterations", method, energy, residual, iterations)
    if residual > tol:
        raise NonConvergenceError(f"Eigen residual {residual:.3g} exceeds tolerance {tol:.3g}")
    return GroundStateResult(energy, vector, residual, iterations, method)


def ground_state(
    op: DiscreteOperator,
    tol: float = AppConfig.SOLVER_TOL,
    method: str = "shift_invert",
    max_iterations: int = AppConfig.MAX_SOLVER_ITERATIONS,
) -> GroundStateResult:
    """
    Lowest eigenpair of a symmetric operator.

    ``shift_invert`` runs ARPACK on (H - sigma)^{-1} with sigma below the
    Gershgorin bound, so the wanted eigenvalue is the one of largest
    magnitude; ``dense`` uses LAPACK and serves as the oracle.

    Args:
        op: The operator
        tol: Bound on ||H v - E v|| for the returned pair
        method: "shift_invert" or "dense"
        max_iterations: ARPACK iteration cap

    Returns:
        GroundStateResult with the Rayleigh-quotient energy

    Raises:
        NonConvergenceError: If ARPACK stops early or the residual exceeds tol
    """
    if not tol > 0:
        raise DomainError(f"Solver tolerance must be positive, got {tol}")
    if method not in ("shift_invert", "dense"):
        raise DomainError(f"Unknown eigensolver method {method!r}")

    if method == "dense" or op.dimension < _DENSE_BELOW:
        values, vectors = linalg.eigh(op.matrix.toarray(), subset_by_index=[0, 0])
        return _finish(op, vectors[:, 0], 1, "dense", tol)

    sigma = op.gershgorin_lower() - 1.0
    factor = spla.splu((op.matrix - sigma * sparse.identity(op.dimension, format="csr")).tocsc())
    solves = 0

    def apply_inverse(x: np.ndarray) -> np.ndarray:
        nonlocal solves
        solves += 1
        return factor.solve(np.asarray(x, dtype=float))

    inverse = spla.LinearOperator(op.matrix.shape, matvec=apply_inverse, dtype=float)
    start = np.ones(op.dimension)
    try:
        _, vectors = spla.eigsh(
            op.matrix, k=1, sigma=sigma, which="LM", OPinv=inverse,
            v0=start, tol=0.0, maxiter=max_iterations,
        )
    except spla.ArpackNoConvergence as e:
        raise NonConvergenceError(f"ARPACK did not converge: {e}")
    logger.debug("Shift-invert with sigma = %g used %d solves", sigma, solves)
    return _finish(op, vectors[:, 0], solves, "shift_invert", tol)
