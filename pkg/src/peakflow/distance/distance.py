"""
Module: distance

This module computes action distances between states and the minimum cycle
length of a state.

Grid worlds use the closed form (Manhattan distance, and a minimum cycle of 2
for every state). General transition graphs use breadth-first search over the
reverse transition graph, so a field holds distances TO its target. An
unreachable state is marked with the ``UNREACHABLE`` sentinel (-1), never with
a large finite number; ``gamma_power_table`` appends a trailing 0.0 so that
indexing the table with the sentinel yields gamma to the power infinity.
"""

import math
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..cache.lfu_cache import LFUCache
from ..mdp.grid_world import GridWorld
from ..mdp.world import UNAVAILABLE
from ..types.type_validation import is_world

UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class DistanceField:
    """
    DistanceField

    Distances from every state to ``source`` (the target of the field).
    ``dist`` is a read-only int64 array with ``UNREACHABLE`` for Infinity.
    """
    source: int
    dist: np.ndarray

    def __getitem__(self, s):
        d = int(self.dist[s])
        return math.inf if d == UNREACHABLE else d

    def __len__(self):
        return len(self.dist)

    def is_reachable(self, s):
        """bool: True when ``source`` can be reached from ``s``."""
        return int(self.dist[s]) != UNREACHABLE

    def finite(self):
        """bool: True when every state reaches ``source``."""
        return bool(np.all(self.dist != UNREACHABLE))


@dataclass(frozen=True)
class MinCycleLength:
    """
    MinCycleLength

    Length of the shortest action sequence leaving ``state`` and returning to it;
    ``math.inf`` when no such sequence exists.
    """
    state: int
    length: float


def manhattan_distance(s, t, world):
    """
    Distance between two grid states in constant time.

    Arguments:
        s (int): Start state.
        t (int): End state.
        world (GridWorld): The grid.

    Returns:
        int: ``|x_s - x_t| + |y_s - y_t|``.
    """
    xs, ys = world.coordinates(s)
    xt, yt = world.coordinates(t)
    return abs(xs - xt) + abs(ys - yt)


def distance_field_to(target, world):
    """
    Distances from every state to ``target``.

    Arguments:
        target (int): The target state.
        world (AbstractWorld): The world.

    Returns:
        DistanceField: ``dist[s] = delta(s, target)``.
    """
    world.check_state(target)
    if isinstance(world, GridWorld):
        xs, ys = world.coordinate_arrays()
        tx, ty = world.coordinates(target)
        dist = np.abs(xs - tx) + np.abs(ys - ty)
    else:
        reverse = world.digraph().reverse(copy=False)
        lengths = nx.single_source_shortest_path_length(reverse, int(target))
        dist = np.full(world.state_count, UNREACHABLE, dtype=np.int64)
        for state, length in lengths.items():
            dist[state] = length
    dist = dist.astype(np.int64)
    dist.flags.writeable = False
    return DistanceField(source=int(target), dist=dist)


def min_cycle_length(s, world, field=None):
    """
    Minimum cycle length of ``s``: min over available actions of ``1 + delta(T(s, a), s)``.

    Arguments:
        s (int): The state.
        world (AbstractWorld): The world.
        field (DistanceField, optional): A precomputed field to ``s``.

    Returns:
        MinCycleLength: 2 for every grid state with a neighbour, 1 with a self-loop,
        ``math.inf`` when ``s`` cannot return to itself.
    """
    world.check_state(s)
    if isinstance(world, GridWorld):
        return MinCycleLength(int(s), 2 if world.state_count >= 2 else math.inf)
    if field is None:
        field = distance_field_to(s, world)
    best = math.inf
    for nxt in world.next_state_table()[s]:
        if nxt == UNAVAILABLE:
            continue
        best = min(best, 1 + field[int(nxt)])
    return MinCycleLength(int(s), best)


def gamma_power_table(gamma, max_distance):
    """
    Powers of the discount factor for every finite distance, plus a trailing 0.0.

    Arguments:
        gamma (float): Discount factor.
        max_distance (int): Largest finite distance to tabulate.

    Returns:
        numpy.ndarray: ``table[d] = gamma ** d`` for ``0 <= d <= max_distance``
        and ``table[-1] = 0.0``, so ``table[UNREACHABLE] == 0.0``.
    """
    powers = np.power(float(gamma), np.arange(max_distance + 1, dtype=np.float64))
    return np.append(powers, 0.0)


class DistanceOracle():
    """
    DistanceOracle

    Per-solve access to distance fields and minimum cycle lengths. Fields are built
    on first request and kept in an LFU cache keyed by target state; the world is
    stationary, so a field never changes once built.
    """

    def __init__(self, world, capacity=1024):
        """
        DistanceOracle Class Constructor

        Arguments:
            world (AbstractWorld): The world distances are measured in.
            capacity (int, optional): Maximum number of cached fields. Defaults to 1024.
        """
        is_world(world, _raise=True)
        self.world = world
        self.cache = LFUCache(capacity=capacity)
        self.__cycles = {}

    def field(self, target):
        """
        Public method: field()
        Returns the distance field to ``target``, building it on a cache miss.
        """
        field = self.cache.get(target)
        if field is None:
            field = distance_field_to(target, self.world)
            self.cache.put(target, field)
        return field

    def distance(self, s, target):
        """
        Public method: distance()
        Returns ``delta(s, target)`` (``math.inf`` when unreachable).
        """
        if isinstance(self.world, GridWorld):
            return manhattan_distance(s, target, self.world)
        return self.field(target)[s]

    def min_cycle(self, s):
        """
        Public method: min_cycle()
        Returns the minimum cycle length of ``s`` as a number (``math.inf`` allowed).
        """
        if s not in self.__cycles:
            field = None if isinstance(self.world, GridWorld) else self.field(s)
            self.__cycles[s] = min_cycle_length(s, self.world, field).length
        return self.__cycles[s]

    def discounts(self, target, power_table):
        """
        Public method: discounts()
        Returns ``gamma ** delta(s, target)`` for every state.

        Arguments:
            target (int): The peak anchor.
            power_table (numpy.ndarray): Output of gamma_power_table() for this world.
        """
        return power_table[self.field(target).dist]
