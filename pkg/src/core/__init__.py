"""Core configuration and error types."""

from .config import AppConfig, Settings
from .errors import (
    DomainError,
    ExitCode,
    MemoryGuardError,
    NonConvergenceError,
    NullStateError,
    UsageError,
    VmregError,
)

__all__ = [
    "AppConfig",
    "DomainError",
    "ExitCode",
    "MemoryGuardError",
    "NonConvergenceError",
    "NullStateError",
    "Settings",
    "UsageError",
    "VmregError",
]
