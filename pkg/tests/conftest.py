"""Shared scenarios for the Peakflow test suite."""

import numpy as np
import pytest

from peakflow.generate.gen_spec import GenSpec, random_scenario
from peakflow.generate.splitmix import SplitMix64
from peakflow.mdp.grid_world import GridWorld
from peakflow.mdp.scenario import RewardSource, Scenario
from peakflow.mdp.transition_graph import TransitionGraph


def grid_scenario(width, height, gamma, rewards):
    """Build a grid scenario from ``[(x, y, value), ...]``."""
    world = GridWorld(width, height)
    sources = [RewardSource(world.state_index(x, y), float(v)) for x, y, v in rewards]
    return Scenario(world, gamma, sources)


def oracle_suite(count, seed=2024):
    """
    Seeded scenarios over 5x5 to 20x20 grids, 1..min(10, |S|) rewards,
    gamma in {0.5, 0.9, 0.95} and values in [1, 10].
    """
    rng = SplitMix64(seed)
    scenarios = []
    for _ in range(count):
        width = rng.randint(5, 20)
        height = rng.randint(5, 20)
        reward_count = rng.randint(1, min(10, width * height))
        gamma = (0.5, 0.9, 0.95)[rng.randbelow(3)]
        spec = GenSpec(width, height, reward_count, (1.0, 10.0), gamma, rng.next_u64())
        scenarios.append(random_scenario(spec))
    return scenarios


def graph_suite(count, seed=77):
    """
    Seeded scenarios on random strongly connected transition graphs: 3..12
    states, 2..4 actions with action 0 stepping round a ring and the others
    random (or unavailable), 1..min(4, |S|) rewards in [1, 10], gamma in
    {0.5, 0.9}.
    """
    rng = SplitMix64(seed)
    scenarios = []
    for _ in range(count):
        n = rng.randint(3, 12)
        table = np.full((n, rng.randint(2, 4)), -1, dtype=np.int64)
        table[:, 0] = (np.arange(n) + 1) % n
        for s in range(n):
            for a in range(1, table.shape[1]):
                table[s, a] = rng.randint(-1, n - 1)
        states = rng.sample(n, rng.randint(1, min(4, n)))
        rewards = [RewardSource(s, rng.uniform(1.0, 10.0)) for s in states]
        gamma = (0.5, 0.9)[rng.randbelow(2)]
        scenarios.append(Scenario(TransitionGraph(table), gamma, rewards))
    return scenarios


@pytest.fixture
def single_reward():
    """5x5 grid, gamma 0.9, reward 1 at (2, 2)."""
    return grid_scenario(5, 5, 0.9, [(2, 2, 1.0)])


@pytest.fixture
def adjacent_pair():
    """5x5 grid, gamma 0.9, reward 2 at (2, 2) and reward 1 at (2, 3)."""
    return grid_scenario(5, 5, 0.9, [(2, 2, 2.0), (2, 3, 1.0)])


@pytest.fixture
def corridor():
    """10x1 grid, gamma 0.5, reward 10 at x=0 and reward 1 at x=5."""
    return grid_scenario(10, 1, 0.5, [(0, 0, 10.0), (5, 0, 1.0)])


@pytest.fixture
def shadowed_corridor():
    """10x1 grid, gamma 0.9, rewards 10 at x=0, 1 at x=3 and 5 at x=4."""
    return grid_scenario(10, 1, 0.9, [(0, 0, 10.0), (3, 0, 1.0), (4, 0, 5.0)])


@pytest.fixture
def ring():
    """The four-state bidirectional ring."""
    return TransitionGraph.ring(4)


@pytest.fixture
def self_loop_graph():
    """Two states; state 0 can stay put or move to 1, state 1 returns to 0."""
    return TransitionGraph(np.array([[0, 1], [0, -1]]))
