"""Effective 1D models: Landau pair reduction, zero and Slater models, delta limit."""

from .delta import TEST_FUNCTIONS, delta_mass, delta_pairing, delta_scaled, delta_scaled_values, gaussian
from .effective import (
    EffectiveInteraction,
    FieldConfig,
    HamiltonianParams,
    ModelKind,
    energy_reconstruct,
    hamiltonian_params,
    slater_coefficients,
    slater_model,
    zero_model,
)
from .landau import PairCoefficients, pair_decomposition, relative_amplitudes, transverse_interaction_quadrature

__all__ = [
    "TEST_FUNCTIONS",
    "EffectiveInteraction",
    "FieldConfig",
    "HamiltonianParams",
    "ModelKind",
    "PairCoefficients",
    "delta_mass",
    "delta_pairing",
    "delta_scaled",
    "delta_scaled_values",
    "energy_reconstruct",
    "gaussian",
    "hamiltonian_params",
    "pair_decomposition",
    "relative_amplitudes",
    "slater_coefficients",
    "slater_model",
    "transverse_interaction_quadrature",
    "zero_model",
]
