"""
Module: distance

This module computes action distances and minimum cycle lengths, in closed form
for grid worlds and by reverse breadth-first search for general transition graphs.
"""
from .distance import UNREACHABLE
from .distance import DistanceField
from .distance import MinCycleLength
from .distance import manhattan_distance
from .distance import distance_field_to
from .distance import min_cycle_length
from .distance import gamma_power_table
from .distance import DistanceOracle

__all__ = [
    "UNREACHABLE",
    "DistanceField",
    "MinCycleLength",
    "manhattan_distance",
    "distance_field_to",
    "min_cycle_length",
    "gamma_power_table",
    "DistanceOracle",
]
