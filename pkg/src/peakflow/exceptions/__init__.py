"""
Module: exceptions

This module provides the Peakflow exception hierarchy.
Every exception derives from PeakflowError.
"""
from .exception import PeakflowError
from .exception import ScenarioValidationError
from .exception import ScenarioFormatError
from .exception import BoundsError
from .exception import InvalidActionError
from .exception import NonAdjacentPeakError
from .exception import StructuralError
from .exception import ConvergenceError
from .exception import SolverInvariantError
from .exception import SolverFailure
from .exception import ResultsError

__all__ = [
    "PeakflowError",
    "ScenarioValidationError",
    "ScenarioFormatError",
    "BoundsError",
    "InvalidActionError",
    "NonAdjacentPeakError",
    "StructuralError",
    "ConvergenceError",
    "SolverInvariantError",
    "SolverFailure",
    "ResultsError",
]
