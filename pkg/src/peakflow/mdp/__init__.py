"""
Module: mdp

This module implements the problem-instance data model for deterministic,
continuous, fully connected MDPs with sparse positive rewards.

Key Components:
    - Action: the four grid moves, in policy tie-break order.
    - AbstractWorld, GridWorld, TransitionGraph: deterministic worlds.
    - RewardSource, Scenario, ValueFunction, Policy: instances and solver outputs.
    - validate_scenario: precondition checks shared by every solver.
    - load_scenario, dump_scenario: the JSON scenario format.
"""
from .action import Action
from .world import AbstractWorld
from .world import UNAVAILABLE
from .grid_world import GridWorld
from .transition_graph import TransitionGraph
from .scenario import RewardSource
from .scenario import Scenario
from .scenario import ValueFunction
from .scenario import Policy
from .validation import validate_scenario
from .validation import scenario_violations
from .scenario_io import scenario_from_dict
from .scenario_io import scenario_to_dict
from .scenario_io import loads_scenario
from .scenario_io import dumps_scenario
from .scenario_io import load_scenario
from .scenario_io import dump_scenario

__all__ = [
    "Action",
    "AbstractWorld",
    "UNAVAILABLE",
    "GridWorld",
    "TransitionGraph",
    "RewardSource",
    "Scenario",
    "ValueFunction",
    "Policy",
    "validate_scenario",
    "scenario_violations",
    "scenario_from_dict",
    "scenario_to_dict",
    "loads_scenario",
    "dumps_scenario",
    "load_scenario",
    "dump_scenario",
]
