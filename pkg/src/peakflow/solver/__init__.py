"""
Module: solver

This module contains the two solvers and their building blocks.

Key Components:
    - AbstractSolver: common solve() lifecycle with logging and timing.
    - ExactSolver, exact_solve: the exact peak-based solver.
    - ValueIterationSolver, value_iteration: the reference oracle.
    - Peak, PeakKind, PeakQueue: peak candidates and their ordering.
"""
from .base_solver import AbstractSolver
from .peak import Peak
from .peak import PeakKind
from .peak import PeakQueue
from .exact_solver import SolveState
from .exact_solver import ProcessedPeak
from .exact_solver import ExactResult
from .exact_solver import ExactSolver
from .exact_solver import cycle_height
from .exact_solver import baseline_peak
from .exact_solver import combined_peak
from .exact_solver import precompute_peaks
from .exact_solver import compute_deltas
from .exact_solver import prune_invalid_peaks
from .exact_solver import remove_affected_peaks
from .exact_solver import select_peak
from .exact_solver import propagate
from .exact_solver import update_value_function
from .exact_solver import exact_solve
from .exact_solver import exact_solve_detailed
from .exact_solver import audit_to_records
from .value_iteration import ViConfig
from .value_iteration import ViResult
from .value_iteration import ValueIterationSolver
from .value_iteration import bellman_backup
from .value_iteration import value_iteration
from .value_iteration import value_iteration_detailed
from .value_iteration import extract_policy
from .value_iteration import evaluate_policy
from .value_iteration import rollout_horizon
from .value_iteration import policy_to_actions

__all__ = [
    "AbstractSolver",
    "Peak",
    "PeakKind",
    "PeakQueue",
    "SolveState",
    "ProcessedPeak",
    "ExactResult",
    "ExactSolver",
    "cycle_height",
    "baseline_peak",
    "combined_peak",
    "precompute_peaks",
    "compute_deltas",
    "prune_invalid_peaks",
    "remove_affected_peaks",
    "select_peak",
    "propagate",
    "update_value_function",
    "exact_solve",
    "exact_solve_detailed",
    "audit_to_records",
    "ViConfig",
    "ViResult",
    "ValueIterationSolver",
    "bellman_backup",
    "value_iteration",
    "value_iteration_detailed",
    "extract_policy",
    "evaluate_policy",
    "rollout_horizon",
    "policy_to_actions",
]
