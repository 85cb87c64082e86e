"""Uniform grids on [-L, L] with Dirichlet ends."""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..core.errors import DomainError, NonConvergenceError
from ..kernel.quadrature import QuadratureSpec, integrate_finite


@dataclass(frozen=True)
class Grid1D:
    """Nodes x_i = -L + i h, i = 0..n-1, h = 2L/(n-1); n odd so x = 0 is a node."""

    half_width: float
    points: int

    def __post_init__(self) -> None:
        if not self.half_width > 0:
            raise DomainError(f"Grid half-width must be positive, got {self.half_width}")
        if self.points < 3 or self.points % 2 == 0:
            raise DomainError(f"Grid needs an odd number of points >= 3, got {self.points}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.points)

    @property
    def interior(self) -> np.ndarray:
        """Nodes carrying unknowns; the Dirichlet ends are eliminated."""
        return self.nodes[1:-1]

    @property
    def dimension(self) -> int:
        return self.points - 2

    @property
    def centre_index(self) -> int:
        """Index of x = 0 among the interior nodes."""
        return (self.points - 3) // 2

    def widened(self, factor: float) -> "Grid1D":
        """Same spacing on [-factor L, factor L] (rounded to whole cells)."""
        cells = int(round(factor * (self.points - 1) / 2.0))
        return Grid1D(cells * self.spacing, 2 * cells + 1)

    def refined(self) -> "Grid1D":
        """Half the spacing on the same interval."""
        return Grid1D(self.half_width, 2 * self.points - 1)


def potential_cell_average(
    potential: Callable[[float], float],
    grid: Grid1D,
    spec: Optional[QuadratureSpec] = None,
) -> np.ndarray:
    """
    Average of ``potential`` over the cell [x_i - h/2, x_i + h/2] of every interior node.

    Cells containing x = 0 are split there, so potentials peaked at the
    origin on a scale far below h are integrated correctly.
    """
    spec = spec or QuadratureSpec(rel_tol=1e-8, abs_tol=1e-12)
    h = grid.spacing
    averages = np.empty(grid.dimension)
    for i, x in enumerate(grid.interior):
        a, b = x - 0.5 * h, x + 0.5 * h
        points = [0.0] if a < 0.0 < b else None
        result = integrate_finite(potential, a, b, spec, points=points)
        if not result.converged:
            raise NonConvergenceError(f"Cell average at x = {x} did not converge")
        averages[i] = result.value / h
    return averages
