"""
Module: utils.py

This module provides utility functions for various common operations such as:

    - Checking and creating files and directories.
    - Parsing the compact CLI notations for grid sizes (``50x50``) and
      ranges (``1..10``).
    - Generating stable hash keys for scenario fingerprints.
"""

import os
import hashlib


def generate_key(input_string):
    """
    Generate a unique MD5 hash key from the given input string.

    Args:
        input_string (str): The input string to hash.

    Returns:
        str: The MD5 hash of the input string in hexadecimal format.
    """
    return hashlib.md5(input_string.encode('utf-8')).hexdigest()


def check_directory(path):
    """
    Check if the given path is an existing directory.

    Args:
        path (str): The path to check.

    Returns:
        bool: True if the path is a directory, False otherwise.
    """
    return os.path.isdir(path)


def check_file(path):
    """
    Check if the given path is an existing file.

    Args:
        path (str): The path to check.

    Returns:
        bool: True if the path is a file, False otherwise.
    """
    return os.path.isfile(path)


def create_directory(path):
    """
    Create a directory (and its parents) at the specified path if it does not already exist.

    Args:
        path (str): The directory path to create.

    Raises:
        FileNotFoundError: If an error occurs during directory creation.
    """
    try:
        if not check_directory(path):
            os.makedirs(path, exist_ok=True)
    except OSError as e:
        raise FileNotFoundError(f"Error creating directory: {path}") from e


def ensure_parent_directory(path):
    """
    Create the parent directory of a file path if it is missing.

    Args:
        path (str): The file path whose directory should exist.
    """
    parent = os.path.dirname(os.path.abspath(path))
    create_directory(parent)


def parse_grid(value):
    """
    Parse a grid size written as ``WIDTHxHEIGHT``.

    Args:
        value (str): The grid notation, e.g. ``"50x50"``.

    Returns:
        tuple: ``(width, height)`` as integers.

    Raises:
        ValueError: If the notation is malformed or a side is not positive.
    """
    parts = value.lower().split("x")
    if len(parts) != 2:
        raise ValueError(f"grid must look like WIDTHxHEIGHT, got {value!r}")
    width, height = int(parts[0]), int(parts[1])
    if width < 1 or height < 1:
        raise ValueError(f"grid sides must be positive, got {value!r}")
    return width, height


def parse_range(value, cast=float):
    """
    Parse a closed range written as ``LO..HI`` or a single value.

    A single value ``N`` is returned as ``(N, N)``.

    Args:
        value (str): The range notation, e.g. ``"1..10"``.
        cast (callable, optional): Conversion applied to both ends. Defaults to float.

    Returns:
        tuple: ``(lo, hi)``.

    Raises:
        ValueError: If the notation is malformed or ``lo > hi``.
    """
    if ".." in value:
        lo_text, hi_text = value.split("..", 1)
        lo, hi = cast(lo_text), cast(hi_text)
    else:
        lo = hi = cast(value)
    if lo > hi:
        raise ValueError(f"range must satisfy LO <= HI, got {value!r}")
    return lo, hi
