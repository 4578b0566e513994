"""
Module: log

This module provides the CustomLogger used by the solvers, the benchmark harness and the CLI,
and the Loggable base class that exposes an optional logger to them.
"""
from .logger import CustomLogger
from .logger import LOG_FORMAT
from .loggable import Loggable

__all__ = [
    "CustomLogger",
    "LOG_FORMAT",
    "Loggable",
]
