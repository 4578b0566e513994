"""
LFU Cache Module.

This module provides a concrete in-memory cache implementation using the least
frequently used (LFU) strategy. It implements the AbstractCache interface,
evicting the least frequently used item (oldest first among equals) when the
capacity is reached.
"""

from collections import defaultdict, OrderedDict

from .cache import AbstractCache


class LFUCache(AbstractCache):
    """A cache implementation using the Least Frequently Used (LFU) strategy.

    Usage Example:
        >>> cache = LFUCache(capacity=2)
        >>> cache.put("a", 1)
        >>> cache.get("a")
        1
    """

    def __init__(self, capacity=1024):
        """Initialize a new LFUCache instance.

        Args:
            capacity (int, optional): Maximum number of items to store in the cache.
                A capacity of 0 disables caching. Defaults to 1024.
        """
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        self.min_freq = 0
        self.key_to_val_freq = {}
        self.freq_to_keys = defaultdict(OrderedDict)
        self.hits = 0
        self.misses = 0

    def __contains__(self, key):
        return key in self.key_to_val_freq

    def __len__(self):
        return len(self.key_to_val_freq)

    def get(self, key):
        """Retrieve the value associated with the given key and update its frequency.

        Args:
            key (Hashable): The key of the cached item.

        Returns:
            Any: The cached value if found; otherwise, ``None``.
        """
        if key not in self.key_to_val_freq:
            self.misses += 1
            return None

        self.hits += 1
        value, freq = self.key_to_val_freq[key]
        del self.freq_to_keys[freq][key]
        if not self.freq_to_keys[freq]:
            del self.freq_to_keys[freq]
            if self.min_freq == freq:
                self.min_freq += 1

        new_freq = freq + 1
        self.freq_to_keys[new_freq][key] = None
        self.key_to_val_freq[key] = (value, new_freq)
        return value

    def put(self, key, value):
        """Insert a value into the cache, evicting the least frequently used item if necessary.

        If the key is already cached, its value is replaced and its frequency bumped.

        Args:
            key (Hashable): The key of the item.
            value (Any): The value to be inserted into the cache.
        """
        if self.capacity <= 0:
            return

        if key in self.key_to_val_freq:
            _, freq = self.key_to_val_freq[key]
            self.key_to_val_freq[key] = (value, freq)
            self.get(key)
            self.hits -= 1
            return

        if len(self.key_to_val_freq) >= self.capacity:
            evict_key, _ = self.freq_to_keys[self.min_freq].popitem(last=False)
            if not self.freq_to_keys[self.min_freq]:
                del self.freq_to_keys[self.min_freq]
            del self.key_to_val_freq[evict_key]

        self.key_to_val_freq[key] = (value, 1)
        self.freq_to_keys[1][key] = None
        self.min_freq = 1

    def reset(self):
        """Reset the cache state.
        """
        self.min_freq = 0
        self.key_to_val_freq = {}
        self.freq_to_keys = defaultdict(OrderedDict)
        self.hits = 0
        self.misses = 0
