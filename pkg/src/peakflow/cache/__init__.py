"""
Module: cache

This module implements caching functionalities. It provides an abstract caching
interface and a concrete in-memory implementation using the Least Frequently Used
(LFU) strategy. The exact solver caches one distance field per peak anchor for the
lifetime of a solve. Any custom caching implementation should derive from the
AbstractCache class.

Key Components:
    - AbstractCache:
    An abstract base class that defines the interface required for caching.
    - LFUCache:
    A caching implementation that employs the LFU algorithm to manage and evict cache entries
    based on usage frequency.
"""
from .cache import AbstractCache
from .lfu_cache import LFUCache

__all__ = [
    "AbstractCache",
    "LFUCache",
]
