"""
Module: scenario_io

Reading and writing scenarios in their JSON form.

Grid scenarios::

    {"grid": {"width": W, "height": H}, "gamma": G,
     "rewards": [{"x": X, "y": Y, "value": V}, ...]}

General graphs::

    {"graph": {"states": N, "actions": M, "next": [[s' or -1, ...], ...]},
     "gamma": G, "rewards": [{"state": S, "value": V}, ...]}

Dumps are deterministic: the same scenario always produces the same bytes.
"""

import json

from ..exceptions.exception import BoundsError, ScenarioFormatError, ScenarioValidationError
from ..utils.utils import ensure_parent_directory
from .grid_world import GridWorld
from .scenario import RewardSource, Scenario
from .transition_graph import TransitionGraph


def _require(document, key, where):
    if not isinstance(document, dict):
        raise ScenarioFormatError(f"{where} must be a JSON object")
    if key not in document:
        raise ScenarioFormatError(f"missing key '{key}' in {where}")
    return document[key]


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFormatError(f"{where} must be a number, got {value!r}")
    return value


def _integer(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioFormatError(f"{where} must be an integer, got {value!r}")
    return value


def scenario_from_dict(document):
    """
    Build a Scenario from its parsed JSON document.

    Arguments:
        document (dict): The parsed scenario document.

    Returns:
        Scenario: The (not yet validated) scenario.

    Raises:
        ScenarioFormatError: If keys are missing or have the wrong type.
        ScenarioValidationError: If a reward coordinate lies outside the grid.
    """
    gamma = _number(_require(document, "gamma", "scenario"), "gamma")
    raw_rewards = _require(document, "rewards", "scenario")
    if not isinstance(raw_rewards, list):
        raise ScenarioFormatError("rewards must be a list")

    if "grid" in document:
        grid = document["grid"]
        try:
            world = GridWorld(_integer(_require(grid, "width", "grid"), "grid.width"),
                              _integer(_require(grid, "height", "grid"), "grid.height"))
        except BoundsError as e:
            raise ScenarioValidationError([e.message]) from e
        rewards = []
        for index, item in enumerate(raw_rewards):
            where = f"rewards[{index}]"
            x = _integer(_require(item, "x", where), f"{where}.x")
            y = _integer(_require(item, "y", where), f"{where}.y")
            value = _number(_require(item, "value", where), f"{where}.value")
            try:
                state = world.state_index(x, y)
            except BoundsError as e:
                raise ScenarioValidationError([e.message]) from e
            rewards.append(RewardSource(state, float(value)))
    elif "graph" in document:
        graph = document["graph"]
        states = _integer(_require(graph, "states", "graph"), "graph.states")
        actions = _integer(_require(graph, "actions", "graph"), "graph.actions")
        rows = _require(graph, "next", "graph")
        if (not isinstance(rows, list) or len(rows) != states
                or any(not isinstance(row, list) or len(row) != actions for row in rows)):
            raise ScenarioFormatError(f"graph.next must be a {states} x {actions} table")
        for row in rows:
            for entry in row:
                _integer(entry, "graph.next entry")
        world = TransitionGraph(rows)
        rewards = []
        for index, item in enumerate(raw_rewards):
            where = f"rewards[{index}]"
            state = _integer(_require(item, "state", where), f"{where}.state")
            value = _number(_require(item, "value", where), f"{where}.value")
            rewards.append(RewardSource(state, float(value)))
    else:
        raise ScenarioFormatError("scenario needs either a 'grid' or a 'graph' section")
    return Scenario(world=world, gamma=float(gamma), rewards=tuple(rewards))


def scenario_to_dict(scenario):
    """
    Convert a Scenario into its JSON document.

    Arguments:
        scenario (Scenario): The scenario to convert.

    Returns:
        dict: The scenario document.
    """
    world = scenario.world
    if isinstance(world, GridWorld):
        rewards = []
        for reward in scenario.rewards:
            x, y = world.coordinates(reward.state)
            rewards.append({"x": x, "y": y, "value": float(reward.value)})
        return {
            "grid": {"width": world.width, "height": world.height},
            "gamma": float(scenario.gamma),
            "rewards": rewards,
        }
    return {
        "graph": {
            "states": world.state_count,
            "actions": world.action_count,
            "next": world.next_state_table().tolist(),
        },
        "gamma": float(scenario.gamma),
        "rewards": [{"state": int(r.state), "value": float(r.value)} for r in scenario.rewards],
    }


def loads_scenario(text):
    """
    Parse a scenario from JSON text.

    Raises:
        ScenarioFormatError: With the line and column of a JSON syntax error.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioFormatError(f"malformed scenario JSON: {e.msg}", e.lineno, e.colno) from e
    return scenario_from_dict(document)


def dumps_scenario(scenario):
    """
    Serialize a scenario to JSON text (two-space indent, trailing newline).
    """
    return json.dumps(scenario_to_dict(scenario), indent=2) + "\n"


def load_scenario(path):
    """
    Read a scenario file.

    Arguments:
        path (str): Path of a UTF-8 JSON scenario file.

    Returns:
        Scenario: The parsed scenario.
    """
    with open(path, "r", encoding="utf-8") as scenario_file:
        return loads_scenario(scenario_file.read())


def dump_scenario(scenario, path):
    """
    Write a scenario file, creating the parent directory if needed.

    Arguments:
        scenario (Scenario): The scenario to write.
        path (str): Destination path.
    """
    ensure_parent_directory(path)
    with open(path, "w", encoding="utf-8", newline="\n") as scenario_file:
        scenario_file.write(dumps_scenario(scenario))
