"""
Module: gen_spec

This module generates seeded random grid scenarios. A GenSpec fixes the grid,
the number of rewards, the value range, the discount and the seed; the same
GenSpec always yields the same Scenario.

Reward positions are drawn uniformly without replacement from all states, and
each value is drawn uniformly from the value range in the same order.
"""

from dataclasses import dataclass, replace
from typing import Tuple

from ..exceptions.exception import ScenarioFormatError
from ..mdp.grid_world import GridWorld
from ..mdp.scenario import RewardSource, Scenario
from .splitmix import MASK64, SplitMix64


@dataclass(frozen=True)
class GenSpec:
    """
    GenSpec

    Parameters of a random grid scenario.

    Attributes:
        width (int): Grid width.
        height (int): Grid height.
        reward_count (int): Number of reward sources, at most width x height.
        value_range (tuple): ``(lo, hi)`` with ``0 < lo <= hi``. Defaults to (1.0, 10.0).
        gamma (float): Discount factor in (0, 1). Defaults to 0.9.
        seed (int): 64-bit unsigned seed. Defaults to 0.
    """
    width: int
    height: int
    reward_count: int
    value_range: Tuple[float, float] = (1.0, 10.0)
    gamma: float = 0.9
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "value_range", tuple(float(v) for v in self.value_range))
        for name in ("width", "height", "reward_count"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.reward_count > self.state_count:
            raise ValueError(
                f"reward_count {self.reward_count} exceeds the {self.state_count} states "
                f"of a {self.width}x{self.height} grid"
            )
        if len(self.value_range) != 2:
            raise ValueError("value_range must be a (lo, hi) pair")
        lo, hi = self.value_range
        if not 0.0 < lo <= hi:
            raise ValueError("value_range must satisfy 0 < lo <= hi")
        if not 0.0 < self.gamma < 1.0:
            raise ValueError("gamma must lie in (0,1)")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) \
                or not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def state_count(self):
        """int: Number of grid states."""
        return self.width * self.height

    def with_seed(self, seed):
        """GenSpec: A copy with a different seed."""
        return replace(self, seed=seed)

    @classmethod
    def from_dict(cls, document):
        """
        Build a GenSpec from a JSON document
        ``{"width", "height", "rewards", "values": [lo, hi], "gamma", "seed"}``;
        ``values``, ``gamma`` and ``seed`` are optional.

        Raises:
            ScenarioFormatError: If a required key is missing or a field has the wrong type.
        """
        if not isinstance(document, dict):
            raise ScenarioFormatError("generation spec must be a JSON object")
        missing = [key for key in ("width", "height", "rewards") if key not in document]
        if missing:
            raise ScenarioFormatError(f"generation spec is missing {', '.join(missing)}")
        try:
            return cls(
                width=document["width"],
                height=document["height"],
                reward_count=document["rewards"],
                value_range=tuple(document.get("values", (1.0, 10.0))),
                gamma=float(document.get("gamma", 0.9)),
                seed=document.get("seed", 0),
            )
        except TypeError as e:
            raise ScenarioFormatError(f"generation spec has a malformed field: {e}") from e

    def to_dict(self):
        """dict: The JSON document accepted by from_dict()."""
        return {
            "width": self.width,
            "height": self.height,
            "rewards": self.reward_count,
            "values": list(self.value_range),
            "gamma": self.gamma,
            "seed": self.seed,
        }


def random_scenario(spec):
    """
    Draw a scenario from ``spec``.

    Arguments:
        spec (GenSpec): Generation parameters.

    Returns:
        Scenario: ``spec.reward_count`` rewards at distinct uniformly drawn
        states, values uniform in ``spec.value_range``.
    """
    rng = SplitMix64(spec.seed)
    world = GridWorld(spec.width, spec.height)
    positions = rng.sample(spec.state_count, spec.reward_count)
    lo, hi = spec.value_range
    rewards = [RewardSource(state, rng.uniform(lo, hi)) for state in positions]
    return Scenario(world, spec.gamma, rewards)


def single_reward_scenario(spec):
    """
    Draw a scenario with exactly one reward source (``spec.reward_count`` is ignored).
    """
    return random_scenario(replace(spec, reward_count=1))


def adjacent_pair_scenario(spec):
    """
    Draw a scenario with exactly two rewards on neighbouring states
    (``spec.reward_count`` is ignored).

    Raises:
        ValueError: If the grid has a single state.
    """
    if spec.state_count < 2:
        raise ValueError("an adjacent pair needs at least two states")
    rng = SplitMix64(spec.seed)
    world = GridWorld(spec.width, spec.height)
    first = rng.randbelow(spec.state_count)
    neighbors = world.neighbors(first)
    second = neighbors[rng.randbelow(len(neighbors))]
    lo, hi = spec.value_range
    rewards = [RewardSource(first, rng.uniform(lo, hi)),
               RewardSource(second, rng.uniform(lo, hi))]
    return Scenario(world, spec.gamma, rewards)


def draw_reward_count(seed, lo, hi):
    """
    Reward count of one verification trial, uniform in ``[lo, hi]`` and
    derived from the trial's own seed.
    """
    return SplitMix64(seed).randint(int(lo), int(hi))
