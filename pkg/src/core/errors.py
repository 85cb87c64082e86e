"""Exception hierarchy and process exit codes."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Exit status of the command-line tool."""

    OK = 0
    USAGE = 1
    DOMAIN = 2
    NON_CONVERGENCE = 3
    VERIFICATION_FAILED = 4


class VmregError(Exception):
    """Base class for all library errors."""


class DomainError(VmregError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NullStateError(DomainError):
    """Antisymmetrizing two identical Landau states gives the zero vector."""


class MemoryGuardError(DomainError):
    """A discretization would exceed the configured size cap."""


class NonConvergenceError(VmregError, ArithmeticError):
    """A quadrature, series or eigensolver did not reach its tolerance."""


class UsageError(VmregError):
    """Command-line arguments are malformed or inconsistent."""
