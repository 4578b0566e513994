"""
Module: scenario

This module defines the problem-instance data model: reward sources, the
Scenario (world + discount + rewards), and the two solver outputs,
ValueFunction and Policy. All of them are immutable after construction.
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

import numpy as np

from .grid_world import GridWorld
from .transition_graph import TransitionGraph
from .world import AbstractWorld


@dataclass(frozen=True)
class RewardSource:
    """
    RewardSource

    A positive reward collected every time the agent occupies ``state``.
    """
    state: int
    value: float


@dataclass(frozen=True)
class Scenario:
    """
    Scenario

    A full problem instance: a deterministic world, a discount factor and a
    non-empty list of reward sources. Construction does not validate the
    invariants; use ``validate_scenario`` before solving.
    """
    world: Union[GridWorld, TransitionGraph]
    gamma: float
    rewards: Tuple[RewardSource, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rewards", tuple(self.rewards))

    @property
    def state_count(self):
        """int: Number of states of the world."""
        return self.world.state_count

    @property
    def is_grid(self):
        """bool: True when the world is a GridWorld."""
        return isinstance(self.world, GridWorld)

    def reward_states(self):
        """
        Public method: reward_states()
        Returns the rewarded states in declaration order.
        """
        return tuple(reward.state for reward in self.rewards)

    def reward_vector(self):
        """
        Public method: reward_vector()
        Returns the dense reward table R(s) as a float64 array.
        """
        vector = np.zeros(self.state_count, dtype=np.float64)
        for reward in self.rewards:
            vector[reward.state] = reward.value
        return vector

    def reward_at(self, s):
        """
        Public method: reward_at()
        Returns R(s), 0.0 for states without a reward source.
        """
        for reward in self.rewards:
            if reward.state == s:
                return reward.value
        return 0.0


class ValueFunction:
    """
    ValueFunction

    Dense per-state values, the output of both solvers. The wrapped array is
    read-only; ``numpy`` functions accept a ValueFunction directly.
    """

    def __init__(self, values):
        array = np.array(values, dtype=np.float64)
        if array.ndim != 1:
            raise ValueError("a value function is a 1-D table")
        array.flags.writeable = False
        self.__values = array

    @property
    def values(self):
        """numpy.ndarray: The read-only value table."""
        return self.__values

    def __array__(self, dtype=None, copy=None):
        if dtype is None and not copy:
            return self.__values
        return np.array(self.__values, dtype=dtype)

    def __len__(self):
        return len(self.__values)

    def __getitem__(self, s):
        return self.__values[s]

    def __iter__(self):
        return iter(self.__values)

    def __repr__(self):
        return f"ValueFunction(states={len(self)}, max={self.max():.6g})"

    def max(self):
        """float: The largest value."""
        return float(self.__values.max()) if len(self.__values) else 0.0

    def checksum(self):
        """float: Sum of all values, used for drift detection in benchmarks."""
        return float(self.__values.sum())

    def is_valid(self):
        """bool: True when every entry is finite and non-negative."""
        return bool(np.all(np.isfinite(self.__values)) and np.all(self.__values >= 0.0))

    def to_list(self):
        """list: Values as plain floats."""
        return [float(v) for v in self.__values]


@dataclass(frozen=True)
class Policy:
    """
    Policy

    One chosen action index per state.
    """
    actions: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(int(a) for a in self.actions))

    def __getitem__(self, s):
        return self.actions[s]

    def __len__(self):
        return len(self.actions)

    def is_valid_for(self, world: AbstractWorld):
        """
        Public method: is_valid_for()
        True when every chosen action is available at its state.
        """
        if len(self.actions) != world.state_count:
            return False
        table = world.next_state_table()
        return all(0 <= a < world.action_count and table[s, a] >= 0
                   for s, a in enumerate(self.actions))
