"""
Module: value_iteration

This module implements the reference solver used as a correctness oracle:
synchronous (Jacobi) Bellman backups from the zero function with a residual
stopping rule, greedy policy extraction and deterministic rollouts.

Because transitions are deterministic the expectation in the Bellman equation
reduces to a single lookup:

    v'[s] = R(s) + gamma * max_a v[T(s, a)]

When the residual ``max_s |v'[s] - v[s]|`` falls below ``epsilon`` the returned
function is within ``epsilon * gamma / (1 - gamma)`` of the optimum.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions.exception import ConvergenceError, StructuralError
from ..mdp.action import Action
from ..mdp.grid_world import GridWorld
from ..mdp.scenario import Policy, ValueFunction
from ..types.type_validation import is_policy
from .base_solver import AbstractSolver


@dataclass(frozen=True)
class ViConfig:
    """
    ViConfig

    Stopping rule of value iteration.
    """
    epsilon: float = 1e-8
    max_iterations: int = 1_000_000

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ValueError("epsilon must be positive")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ValueError("max_iterations must be a positive integer")

    def error_bound(self, gamma):
        """
        Public method: error_bound()
        Sup-norm distance to the optimum guaranteed at termination.
        """
        return self.epsilon * gamma / (1.0 - gamma)


@dataclass(frozen=True)
class ViResult:
    """
    ViResult

    Output of a value iteration run.
    """
    values: ValueFunction
    iterations: int
    residual: float
    residuals: Tuple[float, ...] = ()


class _BackupTables():
    """Successor lookup prepared once per solve: unavailable actions read -inf."""

    def __init__(self, scenario):
        table = scenario.world.next_state_table()
        self.mask = table >= 0
        self.safe = np.where(self.mask, table, 0)
        self.rewards = scenario.reward_vector()
        self.gamma = float(scenario.gamma)

    def successor_values(self, v):
        return np.where(self.mask, v[self.safe], -np.inf)

    def backup(self, v):
        updated = self.rewards + self.gamma * self.successor_values(v).max(axis=1)
        return updated, float(np.max(np.abs(updated - v)))


def _as_array(v, scenario):
    array = np.asarray(v, dtype=np.float64)
    if array.shape != (scenario.state_count,):
        raise StructuralError(
            f"value table has shape {array.shape}, expected ({scenario.state_count},)"
        )
    return array


def bellman_backup(v, scenario):
    """
    One synchronous Bellman backup.

    Arguments:
        v (ValueFunction or array-like): Current values, one per state.
        scenario (Scenario): The scenario.

    Returns:
        tuple: ``(ValueFunction, residual)`` with ``residual = max_s |v'[s] - v[s]|``.
    """
    updated, residual = _BackupTables(scenario).backup(_as_array(v, scenario))
    return ValueFunction(updated), residual


def value_iteration_detailed(scenario, cfg=None, initial=None, record_residuals=False):
    """
    Run value iteration and return the full result.

    Arguments:
        scenario (Scenario): A validated scenario.
        cfg (ViConfig, optional): Stopping rule. Defaults to ViConfig().
        initial (array-like, optional): Starting values. Defaults to zeros.
        record_residuals (bool, optional): Keep the residual of every backup.

    Returns:
        ViResult: Values, backup count, final residual and optional residual history.

    Raises:
        ConvergenceError: If the residual is still >= epsilon after max_iterations backups.
    """
    cfg = cfg or ViConfig()
    tables = _BackupTables(scenario)
    if initial is None:
        v = np.zeros(scenario.state_count, dtype=np.float64)
    else:
        v = _as_array(initial, scenario).copy()
    history = []
    residual = math.inf
    iterations = 0
    while iterations < cfg.max_iterations:
        v, residual = tables.backup(v)
        iterations += 1
        if record_residuals:
            history.append(residual)
        if residual < cfg.epsilon:
            return ViResult(ValueFunction(v), iterations, residual, tuple(history))
    raise ConvergenceError("value iteration did not converge", residual, iterations)


def value_iteration(scenario, cfg=None):
    """
    Solve ``scenario`` by value iteration from the zero function.

    Arguments:
        scenario (Scenario): A validated scenario.
        cfg (ViConfig, optional): Stopping rule. Defaults to ViConfig().

    Returns:
        ValueFunction: Within ``cfg.error_bound(gamma)`` of the optimum.
    """
    return value_iteration_detailed(scenario, cfg).values


def extract_policy(v, scenario):
    """
    Greedy policy with respect to ``v``.

    Ties are broken by the lowest action index, which on grids is the order
    Up < Down < Left < Right.

    Arguments:
        v (ValueFunction or array-like): Finite values, one per state.
        scenario (Scenario): The scenario.

    Returns:
        Policy: ``argmax_a v[T(s, a)]`` at every state.
    """
    values = _as_array(v, scenario)
    successor = _BackupTables(scenario).successor_values(values)
    return Policy(tuple(int(a) for a in np.argmax(successor, axis=1)))


def evaluate_policy(scenario, policy, start, horizon):
    """
    Discounted return of a deterministic rollout.

    Arguments:
        scenario (Scenario): The scenario.
        policy (Policy): The policy to follow.
        start (int): The start state.
        horizon (int): Number of steps to simulate.

    Returns:
        float: ``sum_{t < horizon} gamma^t R(s_t)``.
    """
    is_policy(policy, _raise=True)
    if horizon < 1:
        raise ValueError("horizon must be positive")
    world = scenario.world
    rewards = scenario.reward_vector()
    state = int(start)
    world.check_state(state)
    total = 0.0
    discount = 1.0
    for _ in range(int(horizon)):
        total += discount * rewards[state]
        discount *= scenario.gamma
        state = world.transition(state, policy[state])
    return total


def rollout_horizon(gamma, v_max, tolerance=1e-6):
    """
    Rollout length after which the discounted tail is negligible:
    ``ceil(log(tolerance * (1 - gamma) / v_max) / log(gamma))`` (at least 1).
    """
    if v_max <= 0.0:
        return 1
    return max(1, math.ceil(math.log(tolerance * (1.0 - gamma) / v_max) / math.log(gamma)))


def policy_to_actions(policy, world):
    """
    Render a policy for output: action names on grids, indices on graphs.
    """
    if isinstance(world, GridWorld):
        return [Action(a).label for a in policy.actions]
    return list(policy.actions)


class ValueIterationSolver(AbstractSolver):
    """
    ValueIterationSolver

    Solver wrapper around value_iteration_detailed() used by the CLI and the
    benchmark harness.

    Usage Example:
        >>> solver = ValueIterationSolver(ViConfig(epsilon=1e-10))
        >>> result = solver.solve(scenario)
        >>> result.values.max()
    """

    name = "value_iteration"

    def __init__(self, config=None, logger=False, record_residuals=False):
        super().__init__(logger=logger)
        self.config = config or ViConfig()
        self.record_residuals = record_residuals

    @property
    def config(self):
        """ViConfig: The stopping rule."""
        return self.__config

    @config.setter
    def config(self, config):
        if not isinstance(config, ViConfig):
            raise TypeError("config must be a ViConfig")
        self.__config = config

    def start_solve(self, scenario):
        self.display_message(
            f"value iteration on {scenario.state_count} states, gamma={scenario.gamma}, "
            f"epsilon={self.config.epsilon}", logging.DEBUG
        )

    def stop_solve(self):
        return

    def execute(self, scenario):
        result = value_iteration_detailed(scenario, self.config,
                                          record_residuals=self.record_residuals)
        self.display_message(
            f"value iteration converged in {result.iterations} iterations "
            f"(residual {result.residual:.3e})"
        )
        return result
