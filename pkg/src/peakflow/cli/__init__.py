"""
Module: cli

This module provides the ``peakflow`` command line.
"""
from .main import main
from .main import build_parser

__all__ = [
    "main",
    "build_parser",
]
