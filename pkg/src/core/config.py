"""Configuration constants and the optional JSON settings file."""

import json
import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

from .errors import DomainError

logger = logging.getLogger(__name__)


class AppConfig:
    """Application configuration constants."""

    # Application metadata
    APP_NAME = "vmreg"
    APP_VERSION = "0.1.0"
    REPORT_VERSION = "1"

    # Quadrature defaults
    REL_TOL = 1e-12
    ABS_TOL = 1e-14
    MAX_SUBDIVISIONS = 200
    RULE_ORDER = 64
    MAX_RULE_ORDER = 128

    # Strategy selection for V_m
    AUTO_REL_ERROR = 1e-10
    ASYMPTOTIC_TARGET = 1e-12

    # Number formatting
    SIGNIFICANT_DIGITS = 17

    # Solver defaults
    SOLVER_TOL = 1e-8
    GRID_POINTS = 2001
    GRID_POINTS_TWO = 201
    DEFAULT_HALF_WIDTH = 40.0
    MAX_HALF_WIDTH = 400.0
    MAX_TWO_PARTICLE_POINTS = 401
    BOUNDARY_SCALE = 1.5
    MAX_SOLVER_ITERATIONS = 5000

    # Verification
    INEQUALITY_SLACK = 1e-9
    CONVEXITY_SLACK = 1e-10
    ODE_TOLERANCE = 1e-6
    ODE_STEP = 1e-4
    IDENTITY_TOLERANCE = 1e-9
    FOURIER_TOLERANCE = 1e-10
    FOURIER_DIRECT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Settings:
    """Run-time settings: AppConfig defaults overridden by a settings file and flags."""

    rel_tol: float = AppConfig.REL_TOL
    abs_tol: float = AppConfig.ABS_TOL
    max_subdivisions: int = AppConfig.MAX_SUBDIVISIONS
    rule_order: int = AppConfig.RULE_ORDER
    solver_tol: float = AppConfig.SOLVER_TOL
    grid_points: int = AppConfig.GRID_POINTS
    grid_points_two: int = AppConfig.GRID_POINTS_TWO
    half_width: float = AppConfig.DEFAULT_HALF_WIDTH
    max_two_particle_points: int = AppConfig.MAX_TWO_PARTICLE_POINTS

    @classmethod
    def from_file(cls, config_file: Optional[Path]) -> "Settings":
        """
        Load settings from a JSON key-value file.

        Args:
            config_file: Path to the settings file, or None for defaults

        Returns:
            Settings with the file's keys applied over the defaults

        Raises:
            DomainError: If the file is unreadable or holds unknown keys
        """
        settings = cls()
        if config_file is None:
            return settings

        try:
            with open(config_file, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (json.JSONDecodeError, OSError) as e:
            raise DomainError(f"Cannot read settings file {config_file}: {e}")

        if not isinstance(data, dict):
            raise DomainError(f"Settings file {config_file} must hold a JSON object")

        logger.debug("Loaded settings file %s with keys %s", config_file, sorted(data))
        return settings.with_overrides(data)

    def with_overrides(self, overrides: Dict[str, Any]) -> "Settings":
        """Return a copy with the non-None entries of ``overrides`` applied."""
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise DomainError(f"Unknown settings keys: {', '.join(unknown)}")

        changes: Dict[str, Any] = {}
        for key, value in overrides.items():
            if value is None:
                continue
            current = getattr(self, key)
            try:
                changes[key] = type(current)(value)
            except (TypeError, ValueError):
                raise DomainError(f"Setting {key} has invalid value {value!r}")
        return replace(self, **changes)

    def quadrature_spec(self):
        """Build the QuadratureSpec these settings describe."""
        from ..kernel.quadrature import QuadratureSpec

        return QuadratureSpec(
            rel_tol=self.rel_tol,
            abs_tol=self.abs_tol,
            max_subdivisions=self.max_subdivisions,
            rule_order=self.rule_order,
        )
