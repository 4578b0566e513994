"""
Module: wrappers

This module provides the timer and log_error decorators.
"""
from .wrappers import timer
from .wrappers import log_error

__all__ = [
    "timer",
    "log_error",
]
