"""Tests for the value iteration oracle, policy extraction and rollouts."""

import math

import numpy as np
import pytest

from peakflow.exceptions.exception import ConvergenceError, StructuralError
from peakflow.mdp import Action, Policy, RewardSource, Scenario
from peakflow.solver import (
    ValueIterationSolver,
    ViConfig,
    bellman_backup,
    evaluate_policy,
    exact_solve,
    extract_policy,
    policy_to_actions,
    rollout_horizon,
    value_iteration,
    value_iteration_detailed,
)

from conftest import graph_suite, oracle_suite


class TestBellmanBackup:
    """A single synchronous backup."""

    def test_from_zero_returns_rewards(self, adjacent_pair):
        updated, residual = bellman_backup(np.zeros(25), adjacent_pair)
        np.testing.assert_allclose(updated, adjacent_pair.reward_vector())
        assert residual == pytest.approx(2.0)

    def test_shape_mismatch(self, adjacent_pair):
        with pytest.raises(StructuralError):
            bellman_backup(np.zeros(24), adjacent_pair)


class TestValueIteration:
    """Convergence to the closed-form values."""

    def test_single_reward(self, single_reward):
        v = value_iteration(single_reward, ViConfig(epsilon=1e-10))
        world = single_reward.world
        assert v[world.state_index(2, 2)] == pytest.approx(5.26315789, abs=1e-6)
        assert v[world.state_index(2, 1)] == pytest.approx(4.73684210, abs=1e-6)

    def test_adjacent_pair(self, adjacent_pair):
        v = value_iteration(adjacent_pair, ViConfig(epsilon=1e-10))
        world = adjacent_pair.world
        assert v[world.state_index(2, 2)] == pytest.approx(15.26315789, abs=1e-6)
        assert v[world.state_index(2, 3)] == pytest.approx(14.73684210, abs=1e-6)

    def test_self_loop(self, self_loop_graph):
        scenario = Scenario(self_loop_graph, 0.5, [RewardSource(0, 1.0)])
        v = value_iteration(scenario, ViConfig(epsilon=1e-12))
        assert v[0] == pytest.approx(2.0, abs=1e-9)
        assert v[1] == pytest.approx(1.0, abs=1e-9)

    def test_non_convergence(self, single_reward):
        with pytest.raises(ConvergenceError) as info:
            value_iteration(single_reward, ViConfig(epsilon=1e-8, max_iterations=3))
        assert info.value.iterations == 3
        assert info.value.residual > 1e-8

    def test_residuals_contract(self, adjacent_pair):
        result = value_iteration_detailed(adjacent_pair, record_residuals=True)
        residuals = np.array(result.residuals)
        assert len(residuals) == result.iterations
        assert np.all(residuals[1:] <= adjacent_pair.gamma * residuals[:-1] + 1e-12)

    def test_warm_start_from_fixed_point(self, adjacent_pair):
        values, _ = exact_solve(adjacent_pair)
        result = value_iteration_detailed(adjacent_pair, initial=values)
        assert result.iterations == 1

    def test_same_fixed_point_from_below_and_above(self):
        config = ViConfig(epsilon=1e-8)
        for scenario in oracle_suite(20, seed=5) + graph_suite(20, seed=5):
            gamma = scenario.gamma
            ceiling = max(r.value for r in scenario.rewards) / (1.0 - gamma)
            from_zero = value_iteration_detailed(scenario, config).values
            from_ceiling = value_iteration_detailed(
                scenario, config, initial=np.full(scenario.state_count, ceiling)).values
            gap = np.max(np.abs(np.asarray(from_zero) - np.asarray(from_ceiling)))
            assert gap <= 2.0 * config.error_bound(gamma), scenario

    def test_error_bound(self):
        assert ViConfig(epsilon=1e-8).error_bound(0.9) == pytest.approx(9e-8)

    def test_invalid_config(self):
        with pytest.raises(ValueError):
            ViConfig(epsilon=0.0)
        with pytest.raises(ValueError):
            ViConfig(max_iterations=0)


class TestPolicy:
    """Greedy extraction and deterministic rollouts."""

    def test_tie_break_order(self, single_reward):
        values, _ = exact_solve(single_reward)
        policy = extract_policy(values, single_reward)
        world = single_reward.world
        assert policy[world.state_index(1, 1)] == Action.DOWN
        assert policy[world.state_index(2, 2)] == Action.UP
        assert policy[world.state_index(2, 0)] == Action.DOWN
        assert policy[world.state_index(4, 2)] == Action.LEFT
        assert policy.is_valid_for(world)

    def test_rollout_matches_values(self, adjacent_pair):
        values, _ = exact_solve(adjacent_pair)
        policy = extract_policy(values, adjacent_pair)
        horizon = rollout_horizon(adjacent_pair.gamma, values.max())
        for start in (0, 12, 17, 24):
            ret = evaluate_policy(adjacent_pair, policy, start, horizon)
            assert ret == pytest.approx(values[start], abs=1e-4)

    def test_rollout_horizon(self):
        expected = math.ceil(math.log(1e-6 * 0.1 / 10.0) / math.log(0.9))
        assert rollout_horizon(0.9, 10.0) == expected

    def test_policy_to_actions(self, single_reward):
        policy = Policy(tuple([0] * 25))
        assert policy_to_actions(policy, single_reward.world)[:2] == ["Up", "Up"]

    def test_rejects_non_policy(self, single_reward):
        with pytest.raises(TypeError):
            evaluate_policy(single_reward, [0] * 25, 0, 10)


class TestValueIterationSolver:
    """The solver wrapper."""

    def test_solve(self, single_reward):
        result = ValueIterationSolver(ViConfig(epsilon=1e-10)).solve(single_reward)
        assert result.residual < 1e-10
        assert result.values[12] == pytest.approx(5.26315789, abs=1e-6)

    def test_config_type(self):
        with pytest.raises(TypeError):
            ValueIterationSolver(config={"epsilon": 1e-6})
