"""Desk-scale ground states of h(N, Z, M) for N = 1 and N = 2."""

from .binding import (
    BindingResult,
    binding_check,
    boundary_sensitivity,
    delta_well_benchmark,
    scaled_delta_well,
    solve_model,
    suggest_half_width,
)
from .eigen import GroundStateResult, ground_state, rayleigh_quotient
from .grid import Grid1D, potential_cell_average
from .operators import (
    DiscreteOperator,
    build_one_particle,
    build_two_particle_bosonic,
    kinetic_matrix,
    pair_vector_to_grid,
    symmetric_isometry,
)

__all__ = [
    "BindingResult",
    "DiscreteOperator",
    "Grid1D",
    "GroundStateResult",
    "binding_check",
    "boundary_sensitivity",
    "build_one_particle",
    "build_two_particle_bosonic",
    "delta_well_benchmark",
    "ground_state",
    "kinetic_matrix",
    "pair_vector_to_grid",
    "potential_cell_average",
    "rayleigh_quotient",
    "scaled_delta_well",
    "solve_model",
    "suggest_half_width",
    "symmetric_isometry",
]
