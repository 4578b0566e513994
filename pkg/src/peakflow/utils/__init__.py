"""
Module: utils

This module provides helper functions for file handling and CLI notation parsing.
"""
from .utils import generate_key
from .utils import check_directory
from .utils import check_file
from .utils import create_directory
from .utils import ensure_parent_directory
from .utils import parse_grid
from .utils import parse_range

__all__ = [
    "generate_key",
    "check_directory",
    "check_file",
    "create_directory",
    "ensure_parent_directory",
    "parse_grid",
    "parse_range",
]
