"""
Module: exception

This module defines the exception hierarchy used throughout Peakflow.
Every exception derives from PeakflowError, which keeps the original message
on the ``message`` attribute so callers (and the CLI) can report it verbatim.
"""


class PeakflowError(Exception):
    """
    PeakflowError

    Base class for all Peakflow exceptions.
    """
    def __init__(self, message):
        super().__init__(message)
        self.message = message


class ScenarioValidationError(PeakflowError):
    """
    ScenarioValidationError

    Raised when a scenario violates one or more of its invariants.
    All violations found are collected in ``violations`` rather than only the first.
    """
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ScenarioFormatError(PeakflowError):
    """
    ScenarioFormatError

    Raised when a scenario, generation spec or sweep spec document cannot be parsed.
    ``line`` and ``column`` locate the problem when it is a JSON syntax error.
    """
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class BoundsError(PeakflowError, ValueError):
    """
    BoundsError

    Raised for coordinates or state ids outside the world.
    """


class InvalidActionError(PeakflowError, ValueError):
    """
    InvalidActionError

    Raised when an action is not available at the requested state.
    """


class NonAdjacentPeakError(PeakflowError, ValueError):
    """
    NonAdjacentPeakError

    Raised when a Combined peak is requested for two rewards that are not
    mutually one step apart.
    """


class StructuralError(PeakflowError, ValueError):
    """
    StructuralError

    Raised when two tables that must share a shape do not.
    """


class ConvergenceError(PeakflowError):
    """
    ConvergenceError

    Raised when value iteration does not reach its residual threshold.
    """
    def __init__(self, message, residual, iterations):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.residual = residual
        self.iterations = iterations


class SolverInvariantError(PeakflowError):
    """
    SolverInvariantError

    Raised when the exact solver detects a broken internal invariant.
    ``diagnostics`` holds the solve state needed to reproduce the failure.
    """
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SolverFailure(PeakflowError):
    """
    SolverFailure

    Raised by the benchmark harness when a solver fails on a generated scenario.
    """
    def __init__(self, message, seed=None):
        if seed is not None:
            message = f"{message} (seed {seed})"
        super().__init__(message)
        self.seed = seed


class ResultsError(PeakflowError):
    """
    ResultsError

    Raised when benchmark results cannot be emitted or read back.
    """
    def __init__(self, message, destination=None):
        if destination is not None:
            message = f"{message}: {destination}"
        super().__init__(message)
        self.destination = destination
