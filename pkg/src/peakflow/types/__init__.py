"""
Module: types

This module provides isinstance checks for the problem-instance classes.
"""
from .type_validation import is_scenario
from .type_validation import is_world
from .type_validation import is_value_function
from .type_validation import is_policy

__all__ = [
    "is_scenario",
    "is_world",
    "is_value_function",
    "is_policy",
]
