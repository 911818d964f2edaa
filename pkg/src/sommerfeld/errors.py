"""Errors raised across the package."""


class SommerfeldError(Exception):
    """Base class for all package errors."""


class DomainError(SommerfeldError, ValueError):
    """An ion state outside the validity domain of the closed-form solution.

    The ``reason`` attribute is one of ``"z_below_min"``, ``"z_above_max"``,
    ``"relativistic_collapse"`` (alpha*z >= n_theta, no bound rosette) or
    ``"bad_quantum_numbers"``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class NotFoundError(SommerfeldError, LookupError):
    """Element or reference-column lookup outside the covered charge range."""


class ResolutionError(SommerfeldError, ValueError):
    """Polyline too coarse for trustworthy self-intersection counting."""


class DegenerateError(SommerfeldError, ValueError):
    """Self-intersection counting requested for a circular orbit (eps = 0)."""
