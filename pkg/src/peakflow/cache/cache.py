"""
Module: cache

Defines the ``AbstractCache`` class, an abstract base class that specifies the interface
required for the per-solve caches in ``Peakflow`` (distance fields keyed by their target
state). Concrete implementations must inherit from ``AbstractCache`` and implement the
methods defined below, ensuring consistent behavior across different caching strategies.
"""

from abc import ABC, abstractmethod


class AbstractCache(ABC):
    """Abstract base class for creating a cache mechanism in ``Peakflow``.
    """

    @abstractmethod
    def put(self, key, value):
        """Inserts or updates an item in the cache.

        Args:
            key (Hashable): The key identifying the item.
            value (Any): The value to be cached.
        """

    @abstractmethod
    def get(self, key):
        """Retrieves an item from the cache using the provided key.

        Args:
            key (Hashable): The key identifying the cached item.

        Returns:
            Any: The cached value associated with the key, or None if not found.
        """

    @abstractmethod
    def reset(self):
        """Resets the cache to its initial, empty state.
        """

    @abstractmethod
    def __contains__(self, key):
        """True when ``key`` is cached."""

    @abstractmethod
    def __len__(self):
        """Number of cached items."""
