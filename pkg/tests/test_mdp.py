"""Tests for the problem-instance data model, validation and the scenario file format."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakflow.exceptions.exception import (
    BoundsError,
    InvalidActionError,
    ScenarioFormatError,
    ScenarioValidationError,
)
from peakflow.mdp import (
    Action,
    GridWorld,
    RewardSource,
    Scenario,
    TransitionGraph,
    UNAVAILABLE,
    ValueFunction,
    dump_scenario,
    dumps_scenario,
    load_scenario,
    loads_scenario,
    scenario_violations,
    validate_scenario,
)

from conftest import grid_scenario


@st.composite
def grid_states(draw):
    world = GridWorld(draw(st.integers(1, 30)), draw(st.integers(1, 30)))
    return world, draw(st.integers(0, world.state_count - 1))


class TestGridWorld:
    """Row-major numbering, legal moves and transitions on grids."""

    def test_state_index(self):
        world = GridWorld(5, 5)
        assert world.state_index(2, 3) == 17
        assert world.state_index(4, 4) == 24
        assert world.state_index(0, 0) == 0

    def test_state_index_out_of_bounds(self):
        with pytest.raises(BoundsError):
            GridWorld(5, 5).state_index(5, 0)
        with pytest.raises(BoundsError):
            GridWorld(5, 5).state_index(0, -1)

    @given(grid_states())
    @settings(max_examples=500)
    def test_state_index_is_a_bijection(self, world_and_state):
        world, s = world_and_state
        x, y = world.coordinates(s)
        assert 0 <= x < world.width and 0 <= y < world.height
        assert world.state_index(x, y) == s
        assert s == y * world.width + x

    @given(grid_states())
    @settings(max_examples=500)
    def test_actions_stay_on_the_grid(self, world_and_state):
        world, s = world_and_state
        available = world.available_actions(s)
        x, y = world.coordinates(s)
        for action in Action:
            if action in available:
                nxt = world.transition(s, action)
                next_x, next_y = world.coordinates(nxt)
                assert abs(next_x - x) + abs(next_y - y) == 1
                assert nxt in world.neighbors(s)
            else:
                with pytest.raises(InvalidActionError):
                    world.transition(s, action)
        assert len(available) == len(world.neighbors(s))

    def test_corner_actions(self):
        world = GridWorld(5, 5)
        assert world.available_actions(0) == (Action.DOWN, Action.RIGHT)
        assert world.available_actions(24) == (Action.UP, Action.LEFT)
        assert len(world.available_actions(12)) == 4

    def test_transition(self):
        world = GridWorld(5, 5)
        center = world.state_index(2, 2)
        assert world.transition(center, Action.UP) == world.state_index(2, 1)
        assert world.transition(center, Action.DOWN) == world.state_index(2, 3)
        assert world.transition(center, Action.LEFT) == world.state_index(1, 2)
        assert world.transition(center, Action.RIGHT) == world.state_index(3, 2)

    def test_transition_off_grid(self):
        with pytest.raises(InvalidActionError):
            GridWorld(5, 5).transition(0, Action.UP)

    def test_next_state_table_marks_unavailable(self):
        table = GridWorld(3, 2).next_state_table()
        assert table.shape == (6, 4)
        assert table[0, Action.UP] == UNAVAILABLE
        assert table[0, Action.RIGHT] == 1
        assert not table.flags.writeable

    def test_neighbors(self):
        world = GridWorld(3, 3)
        assert world.neighbors(4) == (1, 3, 5, 7)
        assert world.neighbors(0) == (1, 3)

    def test_invalid_dimensions(self):
        with pytest.raises(BoundsError):
            GridWorld(0, 4)
        with pytest.raises(TypeError):
            GridWorld(2.5, 4)

    def test_to_transition_graph_keeps_table(self):
        world = GridWorld(4, 3)
        graph = world.to_transition_graph()
        np.testing.assert_array_equal(graph.next_state_table(), world.next_state_table())
        assert graph.is_fully_connected()


class TestTransitionGraph:
    """The general next-state table form."""

    def test_ring(self, ring):
        assert ring.transition(3, 0) == 0
        assert ring.transition(0, 1) == 3
        assert ring.is_fully_connected()

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(ScenarioValidationError):
            TransitionGraph([[1], [5]])

    def test_rejects_non_integer_entries(self):
        with pytest.raises(ScenarioValidationError):
            TransitionGraph([[0.5], [0.0]])

    def test_unreachable_pair(self):
        graph = TransitionGraph([[1], [1]])
        assert not graph.is_fully_connected()
        assert graph.unreachable_pair() == (1, 0)

    def test_neighbors_exclude_self(self, self_loop_graph):
        assert self_loop_graph.neighbors(0) == (1,)
        assert self_loop_graph.neighbors(1) == (0,)


class TestValidation:
    """Every invariant violation is reported, not only the first."""

    def test_valid_scenario_passes(self, single_reward):
        assert validate_scenario(single_reward) is single_reward

    def test_gamma_bounds(self):
        for gamma in (0.0, 1.0, -0.1, 1.5):
            scenario = grid_scenario(3, 3, gamma, [(0, 0, 1.0)])
            with pytest.raises(ScenarioValidationError, match="gamma"):
                validate_scenario(scenario)

    def test_one_by_one_grid(self):
        scenario = Scenario(GridWorld(1, 1), 0.9, [RewardSource(0, 1.0)])
        assert "a 1x1 grid has no legal action" in scenario_violations(scenario)

    def test_collects_all_violations(self):
        world = GridWorld(3, 3)
        scenario = Scenario(world, 1.0, [RewardSource(0, -1.0), RewardSource(0, 2.0),
                                         RewardSource(12, 1.0)])
        with pytest.raises(ScenarioValidationError) as info:
            validate_scenario(scenario)
        violations = info.value.violations
        assert "gamma must lie in (0,1)" in violations
        assert "duplicate reward state 0" in violations
        assert "reward state 12 is not a state of the world" in violations
        assert any(v.startswith("reward value must be positive") for v in violations)

    def test_no_rewards(self):
        scenario = Scenario(GridWorld(3, 3), 0.9, [])
        assert "scenario needs at least one reward source" in scenario_violations(scenario)

    def test_disconnected_graph(self):
        scenario = Scenario(TransitionGraph([[1], [1]]), 0.9, [RewardSource(1, 1.0)])
        with pytest.raises(ScenarioValidationError, match="not fully connected"):
            validate_scenario(scenario)

    def test_stuck_state(self):
        scenario = Scenario(TransitionGraph([[1, -1], [-1, -1]]), 0.9, [RewardSource(0, 1.0)])
        assert "state 1 has no available action" in scenario_violations(scenario)


class TestScenarioFormat:
    """The JSON scenario format."""

    def test_grid_round_trip(self, adjacent_pair):
        assert loads_scenario(dumps_scenario(adjacent_pair)) == adjacent_pair

    def test_graph_round_trip(self, ring):
        scenario = Scenario(ring, 0.5, [RewardSource(2, 3.0)])
        assert loads_scenario(dumps_scenario(scenario)) == scenario

    def test_grid_document(self, single_reward):
        document = json.loads(dumps_scenario(single_reward))
        assert document == {
            "grid": {"width": 5, "height": 5},
            "gamma": 0.9,
            "rewards": [{"x": 2, "y": 2, "value": 1.0}],
        }

    def test_dumps_is_deterministic(self, adjacent_pair):
        assert dumps_scenario(adjacent_pair) == dumps_scenario(adjacent_pair)

    def test_malformed_json_reports_location(self):
        with pytest.raises(ScenarioFormatError) as info:
            loads_scenario('{"grid": {"width": 5,\n "height": }}')
        assert info.value.line == 2

    def test_missing_key(self):
        with pytest.raises(ScenarioFormatError, match="gamma"):
            loads_scenario('{"grid": {"width": 5, "height": 5}, "rewards": []}')

    def test_reward_outside_grid(self):
        text = '{"grid": {"width": 2, "height": 2}, "gamma": 0.9, "rewards": [{"x": 3, "y": 0, "value": 1}]}'
        with pytest.raises(ScenarioValidationError):
            loads_scenario(text)

    def test_file_round_trip(self, tmp_path, adjacent_pair):
        path = tmp_path / "nested" / "scenario.json"
        dump_scenario(adjacent_pair, str(path))
        assert load_scenario(str(path)) == adjacent_pair


class TestScenarioAndValues:
    """Scenario accessors and the read-only ValueFunction."""

    def test_reward_vector(self, adjacent_pair):
        vector = adjacent_pair.reward_vector()
        assert vector.sum() == pytest.approx(3.0)
        assert vector[12] == 2.0
        assert adjacent_pair.reward_at(17) == 1.0
        assert adjacent_pair.reward_at(0) == 0.0

    def test_value_function_is_read_only(self):
        values = ValueFunction([1.0, 2.0, 3.0])
        with pytest.raises(ValueError):
            np.asarray(values)[0] = 5.0
        assert values.checksum() == pytest.approx(6.0)
        assert values.max() == 3.0
        assert values.is_valid()
