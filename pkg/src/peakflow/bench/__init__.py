"""
Module: bench

This module times the exact solver against value iteration over seeded sweeps.

Key Components:
    - BenchmarkRecord, SweepSpec: one timed solve and one sweep description.
    - rewards_sweep, states_sweep, discount_sweep: the three standard sweeps.
    - time_solver, run_sweep, Harness: the timing runner.
    - summarize_records: mean, std and min wall time per point.
"""
from .records import RECORD_COLUMNS
from .records import SOLVER_IDS
from .records import BenchmarkRecord
from .records import SweepPoint
from .records import SweepSpec
from .records import load_sweep_spec
from .records import rewards_sweep
from .records import states_sweep
from .records import discount_sweep
from .harness import Harness
from .harness import time_solver
from .harness import run_sweep
from .harness import checksum_tolerance
from .harness import summarize_records

__all__ = [
    "RECORD_COLUMNS",
    "SOLVER_IDS",
    "BenchmarkRecord",
    "SweepPoint",
    "SweepSpec",
    "load_sweep_spec",
    "rewards_sweep",
    "states_sweep",
    "discount_sweep",
    "Harness",
    "time_solver",
    "run_sweep",
    "checksum_tolerance",
    "summarize_records",
]
