"""
Module: peak

This module defines the peaks the exact solver selects from, and the queue that
orders them.

A peak is a candidate local maximum of the value function:

    - Baseline: a reward collected forever on its own, ``r / (1 - gamma^phi)``.
    - Combined: two mutually adjacent rewards collected forever together.
    - Delta: a reward collected once on top of the current value function.

Candidates are ordered by value descending, then Combined > Baseline > Delta,
then ascending anchor state. A Delta is ranked by its ``priority`` (at least its
value, raised to the best neighbouring value) so that it is only selected once
the values it builds on are in place.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Optional


class PeakKind(Enum):
    """
    PeakKind

    Kind of a peak; ``rank`` is the tie-break order (lower wins).
    """
    COMBINED = ("combined", 0)
    BASELINE = ("baseline", 1)
    DELTA = ("delta", 2)

    def __init__(self, label, rank):
        self.label = label
        self.rank = rank


@dataclass(frozen=True)
class Peak:
    """
    Peak

    A candidate local maximum.

    Attributes:
        kind (PeakKind): Baseline, Combined or Delta.
        anchor (int): The peak state (the primary state of a Combined peak).
        value (float): Height of the value function at the anchor.
        affected_rewards (frozenset): Reward states retired when the peak is selected.
        secondary_anchor (int, optional): The secondary state of a Combined peak.
        primary_height (float, optional): Combined only, height of the primary's two-state cycle.
        secondary_height (float, optional): Combined only, height of the secondary's two-state cycle.
        priority (float, optional): Selection rank; defaults to ``value``.
    """
    kind: PeakKind
    anchor: int
    value: float
    affected_rewards: FrozenSet[int] = field(default_factory=frozenset)
    secondary_anchor: Optional[int] = None
    primary_height: Optional[float] = None
    secondary_height: Optional[float] = None
    priority: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "affected_rewards", frozenset(self.affected_rewards))
        if self.priority is None:
            object.__setattr__(self, "priority", self.value)

    def sort_key(self):
        """
        Public method: sort_key()
        Total order used by the queue and by candidate selection (smaller first).
        """
        secondary = -1 if self.secondary_anchor is None else self.secondary_anchor
        return (-self.priority, self.kind.rank, self.anchor, secondary)

    def touches(self, rewards):
        """
        Public method: touches()
        True when the peak's affected rewards intersect ``rewards``.
        """
        return not self.affected_rewards.isdisjoint(rewards)

    def describe(self):
        """str: A short human-readable description used in logs."""
        if self.kind is PeakKind.COMBINED:
            return f"{self.kind.label}({self.anchor},{self.secondary_anchor})={self.value:.6g}"
        return f"{self.kind.label}({self.anchor})={self.value:.6g}"


class PeakQueue():
    """
    PeakQueue

    Baseline and Combined candidates kept sorted by ``Peak.sort_key()``.

    Usage Example:
        >>> queue = PeakQueue([peak_a, peak_b])
        >>> queue.head()
    """

    def __init__(self, peaks=()):
        self.__entries = sorted(peaks, key=Peak.sort_key)
        keys = [peak.sort_key() for peak in self.__entries]
        if len(set(keys)) != len(keys):
            raise ValueError("peak queue entries must be pairwise distinct")

    def __len__(self):
        return len(self.__entries)

    def __iter__(self):
        return iter(self.__entries)

    def __bool__(self):
        return bool(self.__entries)

    def entries(self):
        """tuple: The queued peaks in order."""
        return tuple(self.__entries)

    def head(self):
        """
        Public method: head()
        Returns the best queued peak, or None when the queue is empty.
        """
        return self.__entries[0] if self.__entries else None

    def remove(self, peak):
        """
        Public method: remove()
        Removes ``peak`` if it is queued.
        """
        self.__entries = [entry for entry in self.__entries if entry != peak]

    def remove_where(self, predicate):
        """
        Public method: remove_where()
        Removes every queued peak for which ``predicate(peak)`` is true.

        Returns:
            list: The removed peaks.
        """
        removed = [entry for entry in self.__entries if predicate(entry)]
        if removed:
            self.__entries = [entry for entry in self.__entries if not predicate(entry)]
        return removed
