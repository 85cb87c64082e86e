"""Effective one-dimensional models of an atom in a strong magnetic field."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Optional, Tuple, Union

import numpy as np

from ..core.errors import DomainError
from ..kernel.quadrature import QuadratureSpec
from ..potential.evaluation import v_values
from .landau import pair_decomposition

logger = logging.getLogger(__name__)

INV_SQRT2 = 1.0 / math.sqrt(2.0)

ArrayLike = Union[float, np.ndarray]


class ModelKind(str, Enum):
    """Transverse ansatz of the electrons."""

    ZERO = "zero"
    SLATER = "slater"


@dataclass(frozen=True)
class FieldConfig:
    """Electron count N, nuclear charge Z and field strength B (scaled units)."""

    N: int
    Z: float
    B: float

    def __post_init__(self) -> None:
        if not float(self.N).is_integer() or self.N < 1:
            raise DomainError(f"Electron count must be an integer >= 1, got {self.N}")
        if not (math.isfinite(self.Z) and self.Z >= 0):
            raise DomainError(f"Nuclear charge must be >= 0, got {self.Z}")
        if not (math.isfinite(self.B) and self.B > 0):
            raise DomainError(f"Field strength must be positive, got {self.B}")

    @property
    def M(self) -> float:
        """Effective mass B^{-1/2}."""
        return 1.0 / math.sqrt(self.B)


@dataclass(frozen=True)
class EffectiveInteraction:
    """
    Convex combination sum_k w_k * scale * V_k(|s| * scale).

    scale = 1/sqrt(2) describes a pair interaction W; scale = 1 an
    attraction V.
    """

    terms: Tuple[Tuple[int, float], ...]
    scale: float = INV_SQRT2

    def __post_init__(self) -> None:
        if not self.terms:
            raise DomainError("An effective interaction needs at least one term")
        indices = [k for k, _ in self.terms]
        if indices != sorted(set(indices)):
            raise DomainError(f"Indices must be sorted and unique, got {indices}")
        if any(w <= 0 for _, w in self.terms):
            raise DomainError("Weights of an effective interaction must be positive")
        total = math.fsum(w for _, w in self.terms)
        if abs(total - 1.0) > 1e-12:
            raise DomainError(f"Weights must sum to one, got {total!r}")

    @classmethod
    def from_exact(cls, weights: Dict[int, Fraction], scale: float = INV_SQRT2) -> "EffectiveInteraction":
        return cls(tuple((k, float(w)) for k, w in sorted(weights.items())), scale)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    def __call__(self, s: ArrayLike, spec: Optional[QuadratureSpec] = None) -> ArrayLike:
        points = np.abs(np.asarray(s, dtype=float)) * self.scale
        total = np.zeros_like(points)
        for k, w in self.terms:
            total = total + w * v_values(float(k), points, spec)
        result = self.scale * total
        return float(result) if result.ndim == 0 else result


def zero_model(N: int) -> Tuple[EffectiveInteraction, EffectiveInteraction]:
    """
    Zero model: every electron in the m = 0 Landau state.

    Returns:
        (attraction V_0, interaction (1/sqrt(2)) V_0(./sqrt(2)))
    """
    if not float(N).is_integer() or N < 1:
        raise DomainError(f"Zero model needs N >= 1, got {N}")
    return EffectiveInteraction(((0, 1.0),), scale=1.0), EffectiveInteraction(((0, 1.0),))


@lru_cache(maxsize=None)
def slater_coefficients(N: int) -> Tuple[Tuple[int, Fraction], ...]:
    """
    Weights c_k of the Slater interaction, exactly.

    Uniform average of the antisymmetrized decompositions of every pair
    m1 < m2 drawn from the occupied states 0..N-1.
    """
    if not float(N).is_integer() or N < 2:
        raise DomainError(f"Slater interaction needs N >= 2, got {N}")
    pairs = list(combinations(range(int(N)), 2))
    average: Dict[int, Fraction] = {}
    for m1, m2 in pairs:
        for k, w in pair_decomposition(m1, m2, True).exact:
            average[k] = average.get(k, Fraction(0)) + w / len(pairs)
    return tuple(sorted(average.items()))


def slater_model(N: int) -> Tuple[EffectiveInteraction, EffectiveInteraction]:
    """
    Slater model: the antisymmetrized product of Landau states 0..N-1.

    Args:
        N: Electron count, N >= 2

    Returns:
        (attraction V_av^N, interaction sum_k c_k (1/sqrt(2)) V_k(./sqrt(2)))
    """
    coefficients = dict(slater_coefficients(N))
    attraction = EffectiveInteraction(tuple((m, 1.0 / N) for m in range(int(N))), scale=1.0)
    interaction = EffectiveInteraction.from_exact(coefficients)
    logger.debug("Slater model N=%d: interaction indices %s", N, interaction.indices)
    return attraction, interaction


@dataclass(frozen=True)
class HamiltonianParams:
    """h(N, Z, M) = sum_i [-(1/M) d^2/dx_i^2 - Z V(x_i)] + sum_{i<j} W(x_i - x_j)."""

    config: FieldConfig
    model: ModelKind
    attraction: EffectiveInteraction
    interaction: Optional[EffectiveInteraction]

    @property
    def kinetic(self) -> float:
        return 1.0 / self.config.M

    def potential(self, xs: ArrayLike, spec: Optional[QuadratureSpec] = None) -> ArrayLike:
        """One-body term -Z V(x)."""
        return -self.config.Z * self.attraction(xs, spec)

    def pair(self, separations: ArrayLike, spec: Optional[QuadratureSpec] = None) -> ArrayLike:
        """Two-body term W(x_i - x_j); zero when there is no interaction."""
        if self.interaction is None:
            return np.zeros_like(np.asarray(separations, dtype=float))
        return self.interaction(separations, spec)


def hamiltonian_params(config: FieldConfig, model: Union[str, ModelKind]) -> HamiltonianParams:
    """
    Bundle the kinetic coefficient 1/M, the attraction and the pair interaction.

    A single electron has no pair interaction; the one-state Slater
    determinant is the state itself, so N = 1 uses V_av^1 = V_0.
    """
    model = ModelKind(model)
    if model is ModelKind.ZERO:
        attraction, interaction = zero_model(config.N)
    elif config.N == 1:
        attraction, interaction = zero_model(1)
    else:
        attraction, interaction = slater_model(config.N)

    return HamiltonianParams(
        config=config,
        model=model,
        attraction=attraction,
        interaction=interaction if config.N > 1 else None,
    )


def energy_reconstruct(e_h: float, N: int, B: float) -> float:
    """E_0^conf = sqrt(B) e_h + N B."""
    if not B > 0:
        raise DomainError(f"Field strength must be positive, got {B}")
    return math.sqrt(B) * e_h + N * B
