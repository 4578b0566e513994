"""
Module: world

This module defines the AbstractWorld class, the common interface of every
deterministic world a Scenario can live in. A world knows its states, its actions
and the deterministic transition table between them; concrete worlds
(GridWorld, TransitionGraph) derive the table in their own way.

All worlds are immutable after construction. The transition table is built once
and handed out read-only, so worlds are safe to share among concurrent workers.
"""

from abc import ABC, abstractmethod
import numpy as np

from ..exceptions.exception import BoundsError, InvalidActionError

UNAVAILABLE = -1


class AbstractWorld(ABC):
    """
    AbstractWorld

    An abstract class for deterministic worlds. Subclasses must implement
    ``state_count``, ``action_count``, ``_build_table()``, ``max_distance()`` and
    ``is_fully_connected()``; everything else is derived from the table.
    """

    def __init__(self):
        self.__table = None
        self.__neighbors = None

    @property
    @abstractmethod
    def state_count(self):
        """
        Abstract property: state_count
        Number of states in the world.
        """

    @property
    @abstractmethod
    def action_count(self):
        """
        Abstract property: action_count
        Number of action slots per state (some may be unavailable).
        """

    @abstractmethod
    def _build_table(self):
        """
        Abstract method: _build_table()
        Builds the ``state_count x action_count`` next-state table,
        with ``UNAVAILABLE`` for actions that are not defined.
        """

    @abstractmethod
    def max_distance(self):
        """
        Abstract method: max_distance()
        Upper bound on any finite distance in the world.
        """

    @abstractmethod
    def is_fully_connected(self):
        """
        Abstract method: is_fully_connected()
        True when every state can reach every other state.
        """

    def next_state_table(self):
        """
        Public method: next_state_table()
        Returns the read-only deterministic next-state table.

        Returns:
            numpy.ndarray: int64 array of shape ``(state_count, action_count)``;
            ``UNAVAILABLE`` (-1) marks actions that are not available.
        """
        if self.__table is None:
            table = np.asarray(self._build_table(), dtype=np.int64)
            table.flags.writeable = False
            self.__table = table
        return self.__table

    def check_state(self, s):
        """
        Public method: check_state()
        Validates a state id.

        Arguments:
            s (int): The state id.

        Raises:
            BoundsError: If ``s`` is not a state of this world.
        """
        if not 0 <= int(s) < self.state_count:
            raise BoundsError(f"state {s} outside 0..{self.state_count - 1}")

    def available_actions(self, s):
        """
        Public method: available_actions()
        Returns the actions with a defined next state at ``s``, in ascending order.

        Arguments:
            s (int): The state id.

        Returns:
            tuple: Available action indices.
        """
        self.check_state(s)
        row = self.next_state_table()[s]
        return tuple(int(a) for a in np.flatnonzero(row != UNAVAILABLE))

    def transition(self, s, a):
        """
        Public method: transition()
        Applies action ``a`` at state ``s``.

        Arguments:
            s (int): The state id.
            a (int): The action index.

        Returns:
            int: The next state.

        Raises:
            InvalidActionError: If ``a`` is not available at ``s``.
        """
        self.check_state(s)
        if not 0 <= int(a) < self.action_count:
            raise InvalidActionError(f"action {a} is not an action of this world")
        nxt = int(self.next_state_table()[s, int(a)])
        if nxt == UNAVAILABLE:
            raise InvalidActionError(f"action {a} is not available at state {s}")
        return nxt

    def neighbors(self, s):
        """
        Public method: neighbors()
        Returns the distinct one-step successors of ``s``, excluding ``s`` itself.

        Arguments:
            s (int): The state id.

        Returns:
            tuple: Sorted successor states.
        """
        return self.neighbor_lists()[s]

    def neighbor_lists(self):
        """
        Public method: neighbor_lists()
        Returns the successor tuple of every state, computed once.

        Returns:
            tuple: ``neighbor_lists()[s]`` equals ``neighbors(s)``.
        """
        if self.__neighbors is None:
            table = self.next_state_table()
            lists = []
            for s in range(self.state_count):
                row = table[s]
                succ = {int(n) for n in row if n != UNAVAILABLE and n != s}
                lists.append(tuple(sorted(succ)))
            self.__neighbors = tuple(lists)
        return self.__neighbors

    def edges(self):
        """
        Public method: edges()
        Yields every ``(state, next_state)`` transition in the table.
        """
        table = self.next_state_table()
        for s in range(self.state_count):
            for nxt in table[s]:
                if nxt != UNAVAILABLE:
                    yield s, int(nxt)
