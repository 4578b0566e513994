"""
Module: validation

This module checks a Scenario against the preconditions every solver relies on:
a discount factor strictly inside (0, 1), distinct positive reward sources on
valid states, at least one legal action per state, and a fully connected world.
"""

import math
import numbers

import numpy as np

from ..exceptions.exception import ScenarioValidationError
from .grid_world import GridWorld
from .transition_graph import TransitionGraph
from .world import UNAVAILABLE


def scenario_violations(scenario):
    """
    Collect every invariant violation of ``scenario``.

    Arguments:
        scenario (Scenario): The scenario to check.

    Returns:
        list: Human-readable violation messages, empty when the scenario is valid.
    """
    violations = []
    world = scenario.world
    if not isinstance(world, (GridWorld, TransitionGraph)):
        return ["world must be a GridWorld or a TransitionGraph"]

    gamma = scenario.gamma
    if (not isinstance(gamma, numbers.Real) or isinstance(gamma, bool)
            or not math.isfinite(gamma) or not 0.0 < gamma < 1.0):
        violations.append("gamma must lie in (0,1)")

    if isinstance(world, GridWorld) and world.state_count < 2:
        violations.append("a 1x1 grid has no legal action")

    if not scenario.rewards:
        violations.append("scenario needs at least one reward source")

    seen = set()
    for reward in scenario.rewards:
        state = reward.state
        if not isinstance(state, numbers.Integral) or not 0 <= state < world.state_count:
            violations.append(f"reward state {state} is not a state of the world")
            continue
        value = reward.value
        if not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0.0:
            violations.append(f"reward value must be positive (state {state}, value {value})")
        if state in seen:
            violations.append(f"duplicate reward state {state}")
        seen.add(state)

    if isinstance(world, TransitionGraph):
        table = world.next_state_table()
        stuck = np.flatnonzero(np.all(table == UNAVAILABLE, axis=1))
        if len(stuck):
            violations.append(f"state {int(stuck[0])} has no available action")
        else:
            pair = world.unreachable_pair()
            if pair is not None:
                violations.append(
                    f"world is not fully connected: state {pair[1]} is unreachable from state {pair[0]}"
                )
    return violations


def validate_scenario(scenario):
    """
    Validate ``scenario`` and return it unchanged.

    Arguments:
        scenario (Scenario): The scenario to check.

    Returns:
        Scenario: The same scenario, when every invariant holds.

    Raises:
        ScenarioValidationError: Listing every violation found.
    """
    violations = scenario_violations(scenario)
    if violations:
        raise ScenarioValidationError(violations)
    return scenario
