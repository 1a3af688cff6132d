"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DetectorLabError(Exception):
    """Base class for all errors raised by :mod:`lightcone_detectors`."""


class DomainError(DetectorLabError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ScenarioError(DomainError):
    """A scenario invariant is violated; ``field`` names the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ConvergenceError(DetectorLabError, ArithmeticError):
    """A numerical procedure stopped before reaching its tolerance.

    The best available estimate travels with the exception so callers can
    decide whether it is still usable.
    """

    def __init__(self, message: str, best_estimate: complex = complex("nan"),
                 error_estimate: float = float("inf")):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class IntegrandError(DetectorLabError, FloatingPointError):
    """The integrand returned a non-finite value at ``abscissa``."""

    def __init__(self, abscissa: float, value: complex):
        super().__init__(f"non-finite integrand value {value!r} at x = {abscissa!r}")
        self.abscissa = abscissa
        self.value = value


class ParseError(DetectorLabError, ValueError):
    """Malformed scenario document; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InvariantViolation(DetectorLabError, AssertionError):
    """An internal consistency check failed (self-test battery)."""
