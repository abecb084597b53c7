"""
Quantum Reading V1.0.0 — Error Types
=====================================
Every failure the library raises derives from QuantumReadingError. Domain
problems are also ValueErrors so callers using plain `except ValueError`
keep working.

The CLI maps these onto process exit codes (see EXIT_CODES).
"""

from typing import Optional


class QuantumReadingError(Exception):
    """Root of the library's exception hierarchy."""


# =============================================================================
# DOMAIN ERRORS (exit code 2)
# =============================================================================

class DomainError(QuantumReadingError, ValueError):
    """Argument outside the domain of an operation."""


class NumericalDegeneracyError(DomainError):
    """Discriminant of the symplectic spectrum is negative beyond tolerance."""


class PreconditionError(DomainError):
    """Inputs are in-domain but violate an operation's contract."""


class DesignInfeasibleError(DomainError):
    """Gap coefficient too large for the photon budget (r would be ≤ 0)."""


class UnreachableTargetError(DomainError):
    """Inverse design has no finite solution."""

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason            # "unreachable" | "unbounded"


class ConfigError(QuantumReadingError, ValueError):
    """Invalid sweep or CLI configuration."""


# =============================================================================
# ORACLE ERRORS
# =============================================================================

class InsufficientCutoffError(QuantumReadingError):
    """Fock truncation discards more probability than the tolerance allows."""

    def __init__(self, message: str, cutoff: int, achieved_tail: float):
        super().__init__(message)
        self.cutoff = cutoff
        self.achieved_tail = achieved_tail


class OracleConfigurationError(QuantumReadingError):
    """Kraus completeness, dimension mismatch or CM structure violation."""


class OracleToleranceError(QuantumReadingError):
    """A closed form disagrees with the Fock oracle beyond tolerance."""

    def __init__(self, message: str, failures: Optional[list[str]] = None):
        super().__init__(message)
        self.failures = failures or []


# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_IO = 3
EXIT_ORACLE = 4


def exit_code_for(exc: QuantumReadingError | OSError) -> int:
    """Process exit code for a failure raised while running a subcommand."""
    if isinstance(exc, OracleToleranceError):
        return EXIT_ORACLE
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_DOMAIN


__all__ = [
    "QuantumReadingError",
    "DomainError",
    "NumericalDegeneracyError",
    "PreconditionError",
    "DesignInfeasibleError",
    "UnreachableTargetError",
    "ConfigError",
    "InsufficientCutoffError",
    "OracleConfigurationError",
    "OracleToleranceError",
    "EXIT_OK",
    "EXIT_DOMAIN",
    "EXIT_IO",
    "EXIT_ORACLE",
    "exit_code_for",
]
