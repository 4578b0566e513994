"""Tests for action distances, minimum cycle lengths and the distance oracle."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakflow.distance import (
    UNREACHABLE,
    DistanceOracle,
    distance_field_to,
    gamma_power_table,
    manhattan_distance,
    min_cycle_length,
)
from peakflow.mdp import UNAVAILABLE, GridWorld, TransitionGraph


@st.composite
def grid_triples(draw):
    width = draw(st.integers(1, 40))
    height = draw(st.integers(1, 40))
    states = st.integers(0, width * height - 1)
    return GridWorld(width, height), draw(states), draw(states), draw(states)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 6))
    actions = draw(st.integers(1, 3))
    row = st.lists(st.integers(-1, n - 1), min_size=actions, max_size=actions)
    return TransitionGraph(draw(st.lists(row, min_size=n, max_size=n)))


def _shortest_return(graph, s):
    """Enumerate action sequences by length until one leads from ``s`` back to ``s``."""
    table = graph.next_state_table()
    for length in range(1, graph.state_count + 1):
        for actions in itertools.product(range(graph.action_count), repeat=length):
            state = s
            for a in actions:
                state = int(table[state, a])
                if state == UNAVAILABLE:
                    break
            if state == s:
                return length
    return math.inf


class TestGridDistances:
    """Closed-form distances on grids."""

    def test_manhattan(self):
        world = GridWorld(5, 5)
        assert manhattan_distance(world.state_index(0, 0), world.state_index(2, 2), world) == 4
        assert manhattan_distance(7, 7, world) == 0

    def test_field_matches_manhattan(self):
        world = GridWorld(6, 4)
        target = world.state_index(4, 1)
        field = distance_field_to(target, world)
        for s in range(world.state_count):
            assert field[s] == manhattan_distance(s, target, world)
        assert field.finite()

    def test_grid_field_matches_bfs_on_graph_form(self):
        world = GridWorld(5, 3)
        graph = world.to_transition_graph()
        for target in (0, 7, 14):
            np.testing.assert_array_equal(distance_field_to(target, world).dist,
                                          distance_field_to(target, graph).dist)

    @pytest.mark.parametrize("width", range(1, 9))
    @pytest.mark.parametrize("height", range(1, 9))
    def test_manhattan_matches_bfs_exhaustively(self, width, height):
        world = GridWorld(width, height)
        graph = world.to_transition_graph()
        for target in range(world.state_count):
            expected = [manhattan_distance(s, target, world) for s in range(world.state_count)]
            np.testing.assert_array_equal(distance_field_to(target, graph).dist, expected)

    @given(grid_triples())
    @settings(max_examples=500)
    def test_triangle_inequality(self, triple):
        world, a, b, c = triple
        assert manhattan_distance(a, a, world) == 0
        assert manhattan_distance(a, b, world) == manhattan_distance(b, a, world)
        assert manhattan_distance(a, c, world) <= \
            manhattan_distance(a, b, world) + manhattan_distance(b, c, world)

    def test_grid_cycle_length(self):
        assert min_cycle_length(6, GridWorld(4, 4)).length == 2


class TestGraphDistances:
    """Reverse breadth-first search on transition graphs."""

    def test_ring_distance(self, ring):
        field = distance_field_to(3, ring)
        assert field[0] == 1
        assert field[2] == 1
        assert field[1] == 2

    def test_ring_cycle(self, ring):
        assert min_cycle_length(0, ring).length == 2

    def test_self_loop_cycle(self, self_loop_graph):
        assert min_cycle_length(0, self_loop_graph).length == 1
        assert min_cycle_length(1, self_loop_graph).length == 2

    def test_directed_cycle(self):
        cycle = TransitionGraph([[1], [2], [0]])
        field = distance_field_to(0, cycle)
        assert list(field.dist) == [0, 2, 1]
        assert min_cycle_length(1, cycle).length == 3

    @given(small_graphs())
    @settings(max_examples=200, deadline=None)
    def test_cycle_matches_enumeration(self, graph):
        for s in range(graph.state_count):
            assert min_cycle_length(s, graph).length == _shortest_return(graph, s)

    def test_unreachable_is_infinite(self):
        graph = TransitionGraph([[1], [1]])
        field = distance_field_to(0, graph)
        assert field.dist[1] == UNREACHABLE
        assert field[1] == math.inf
        assert not field.is_reachable(1)
        assert not field.finite()
        assert min_cycle_length(1, graph).length == 1
        assert min_cycle_length(0, graph).length == math.inf


class TestPowerTable:
    """Discount powers with the unreachable sentinel."""

    def test_powers(self):
        table = gamma_power_table(0.5, 3)
        np.testing.assert_allclose(table, [1.0, 0.5, 0.25, 0.125, 0.0])
        assert table[UNREACHABLE] == 0.0


class TestDistanceOracle:
    """Per-solve caching of fields."""

    def test_fields_are_cached(self):
        world = GridWorld(5, 5)
        oracle = DistanceOracle(world)
        first = oracle.field(12)
        assert oracle.field(12) is first
        assert oracle.cache.hits == 1
        assert oracle.cache.misses == 1

    def test_discounts(self):
        world = GridWorld(5, 5)
        oracle = DistanceOracle(world)
        table = gamma_power_table(0.9, world.max_distance())
        discounts = oracle.discounts(world.state_index(2, 2), table)
        assert discounts[world.state_index(0, 0)] == pytest.approx(0.9 ** 4)
        assert discounts[world.state_index(2, 2)] == 1.0

    def test_graph_distance_and_cycle(self, ring):
        oracle = DistanceOracle(ring)
        assert oracle.distance(0, 3) == 1
        assert oracle.distance(3, 0) == 1
        assert oracle.min_cycle(0) == 2

    def test_rejects_non_world(self):
        with pytest.raises(TypeError):
            DistanceOracle("grid")
