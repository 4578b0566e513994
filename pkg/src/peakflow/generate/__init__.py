"""
Module: generate

This module draws reproducible random scenarios from a portable SplitMix64 generator.
"""
from .splitmix import SplitMix64
from .splitmix import derive_seed
from .gen_spec import GenSpec
from .gen_spec import random_scenario
from .gen_spec import single_reward_scenario
from .gen_spec import adjacent_pair_scenario
from .gen_spec import draw_reward_count

__all__ = [
    "SplitMix64",
    "derive_seed",
    "GenSpec",
    "random_scenario",
    "single_reward_scenario",
    "adjacent_pair_scenario",
    "draw_reward_count",
]
