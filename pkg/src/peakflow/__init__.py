"""
Package: Peakflow
Version: 1.0.0

This package solves deterministic, continuous, fully connected Markov decision
processes with sparse positive rewards exactly. Instead of iterating Bellman
backups until convergence, the optimal value function is assembled from a few
peaks (rewards collected forever alone, in adjacent pairs, or once) propagated in
closed form over the state space. A value iteration solver serves as the
correctness oracle, and a benchmark harness compares the two.

Key Components:
    - MDP: Grid worlds, general transition graphs and scenarios.
        Action, GridWorld, TransitionGraph, RewardSource, Scenario, ValueFunction, Policy
    - Distance: Action distances and minimum cycle lengths.
        DistanceOracle, distance_field_to, min_cycle_length
    - Solver: The exact peak-based solver and the value iteration oracle.
        ExactSolver, exact_solve, ValueIterationSolver, value_iteration
    - Generate: Seeded random scenarios from a portable SplitMix64 generator.
        GenSpec, random_scenario
    - Bench: Timed sweeps over reward count, grid size and discount factor.
        SweepSpec, Harness, run_sweep, summarize_records
    - Emit: CSV and JSON benchmark results.
        emit_results, read_results
    - Cache: LFU cache backing the distance oracle.
        AbstractCache, LFUCache
    - Exceptions: Defines custom exceptions for improved error handling.
        PeakflowError and its subclasses
    - Log: Provides a customizable logging solution.
        CustomLogger, Loggable
    - Types: Offers type-checking utilities.
    - Utils: Provides helper functions for common tasks and operations.
    - Wrappers: Contains decorators to facilitate performance monitoring and error handling.
      (timer, log_error)
"""

from .mdp.action import Action
from .mdp.grid_world import GridWorld
from .mdp.transition_graph import TransitionGraph
from .mdp.scenario import RewardSource
from .mdp.scenario import Scenario
from .mdp.scenario import ValueFunction
from .mdp.scenario import Policy
from .mdp.validation import validate_scenario
from .mdp.scenario_io import load_scenario
from .mdp.scenario_io import dump_scenario
from .distance.distance import DistanceOracle
from .distance.distance import distance_field_to
from .distance.distance import min_cycle_length
from .distance.distance import manhattan_distance
from .cache.cache import AbstractCache
from .cache.lfu_cache import LFUCache
from .solver.peak import Peak
from .solver.peak import PeakKind
from .solver.peak import PeakQueue
from .solver.exact_solver import ExactSolver
from .solver.exact_solver import ExactResult
from .solver.exact_solver import exact_solve
from .solver.exact_solver import exact_solve_detailed
from .solver.value_iteration import ViConfig
from .solver.value_iteration import ValueIterationSolver
from .solver.value_iteration import value_iteration
from .solver.value_iteration import bellman_backup
from .solver.value_iteration import extract_policy
from .solver.value_iteration import evaluate_policy
from .generate.splitmix import SplitMix64
from .generate.gen_spec import GenSpec
from .generate.gen_spec import random_scenario
from .bench.records import BenchmarkRecord
from .bench.records import SweepSpec
from .bench.harness import Harness
from .bench.harness import time_solver
from .bench.harness import run_sweep
from .bench.harness import summarize_records
from .emit.results import emit_results
from .emit.results import read_results
from .exceptions.exception import PeakflowError
from .exceptions.exception import ScenarioValidationError
from .exceptions.exception import ScenarioFormatError
from .log.logger import CustomLogger
from .types.type_validation import is_scenario
from .types.type_validation import is_world
from .types.type_validation import is_value_function
from .types.type_validation import is_policy
from .utils.utils import parse_grid
from .utils.utils import parse_range
from .wrappers.wrappers import timer
from .wrappers.wrappers import log_error

__version__ = "1.0.0"
