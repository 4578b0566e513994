"""Tests for the SplitMix64 generator and the scenario generators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakflow.exceptions.exception import ScenarioFormatError
from peakflow.generate import (
    GenSpec,
    SplitMix64,
    adjacent_pair_scenario,
    derive_seed,
    draw_reward_count,
    random_scenario,
    single_reward_scenario,
)
from peakflow.mdp.scenario_io import dumps_scenario
from peakflow.mdp.validation import validate_scenario

seeds = st.integers(0, 2 ** 64 - 1)


@st.composite
def gen_specs(draw):
    width = draw(st.integers(1, 15))
    height = draw(st.integers(2 if width == 1 else 1, 15))
    lo = draw(st.floats(0.1, 10.0))
    hi = lo + draw(st.floats(0.0, 10.0))
    return GenSpec(
        width=width,
        height=height,
        reward_count=draw(st.integers(1, min(20, width * height))),
        value_range=(lo, hi),
        gamma=draw(st.floats(0.01, 0.99)),
        seed=draw(seeds),
    )


class TestSplitMix64:
    """The portable generator."""

    def test_reference_outputs(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_random_in_unit_interval(self):
        rng = SplitMix64(42)
        draws = [rng.random() for _ in range(1000)]
        assert min(draws) >= 0.0
        assert max(draws) < 1.0

    def test_uniform_range(self):
        rng = SplitMix64(3)
        draws = [rng.uniform(1.0, 10.0) for _ in range(500)]
        assert all(1.0 <= d < 10.0 for d in draws)

    def test_randint_covers_range(self):
        rng = SplitMix64(5)
        assert {rng.randint(1, 4) for _ in range(200)} == {1, 2, 3, 4}

    def test_sample_distinct(self):
        drawn = SplitMix64(9).sample(30, 30)
        assert sorted(drawn) == list(range(30))

    def test_sample_too_many(self):
        with pytest.raises(ValueError):
            SplitMix64(9).sample(3, 4)

    @pytest.mark.parametrize("seed, error", [(-1, ValueError), (1 << 64, ValueError),
                                             (1.5, TypeError), (True, TypeError)])
    def test_bad_seed(self, seed, error):
        with pytest.raises(error):
            SplitMix64(seed)

    def test_derive_seed(self):
        assert derive_seed(7, 1, 2) == derive_seed(7, 1, 2)
        seeds = {derive_seed(7, p, t) for p in range(5) for t in range(50)}
        assert len(seeds) == 250
        assert all(0 <= s < (1 << 64) for s in seeds)


class TestGenSpec:
    """Generation parameters."""

    def test_defaults(self):
        spec = GenSpec(10, 10, 5)
        assert spec.value_range == (1.0, 10.0)
        assert spec.gamma == 0.9
        assert spec.seed == 0

    @pytest.mark.parametrize("kwargs", [
        {"width": 0, "height": 5, "reward_count": 1},
        {"width": 2, "height": 2, "reward_count": 5},
        {"width": 5, "height": 5, "reward_count": 1, "gamma": 1.0},
        {"width": 5, "height": 5, "reward_count": 1, "value_range": (0.0, 1.0)},
        {"width": 5, "height": 5, "reward_count": 1, "value_range": (3.0, 2.0)},
        {"width": 5, "height": 5, "reward_count": 1, "seed": -3},
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            GenSpec(**kwargs)

    def test_document_round_trip(self):
        spec = GenSpec(8, 6, 4, (2.0, 3.0), 0.95, 11)
        assert GenSpec.from_dict(spec.to_dict()) == spec

    def test_document_missing_key(self):
        with pytest.raises(ScenarioFormatError, match="rewards"):
            GenSpec.from_dict({"width": 3, "height": 3})

    def test_document_not_an_object(self):
        with pytest.raises(ScenarioFormatError):
            GenSpec.from_dict([3, 3, 1])


class TestScenarioGenerators:
    """Seeded scenario draws."""

    def test_same_seed_same_bytes(self):
        spec = GenSpec(12, 9, 6, gamma=0.95, seed=123)
        assert dumps_scenario(random_scenario(spec)) == dumps_scenario(random_scenario(spec))

    def test_different_seeds_differ(self):
        spec = GenSpec(12, 9, 6, seed=1)
        assert dumps_scenario(random_scenario(spec)) != \
            dumps_scenario(random_scenario(spec.with_seed(2)))

    def test_random_scenario_is_valid(self):
        spec = GenSpec(7, 5, 10, (2.0, 4.0), 0.5, 99)
        scenario = random_scenario(spec)
        validate_scenario(scenario)
        assert len(scenario.rewards) == 10
        assert len(set(scenario.reward_states())) == 10
        assert all(2.0 <= r.value < 4.0 for r in scenario.rewards)

    @given(gen_specs())
    @settings(max_examples=300)
    def test_random_scenarios_are_valid(self, spec):
        scenario = random_scenario(spec)
        validate_scenario(scenario)
        states = scenario.reward_states()
        assert len(states) == spec.reward_count
        assert len(set(states)) == spec.reward_count
        lo, hi = spec.value_range
        assert all(lo <= r.value <= hi + 1e-9 for r in scenario.rewards)

    @given(gen_specs())
    @settings(max_examples=100)
    def test_same_spec_same_scenario(self, spec):
        assert dumps_scenario(random_scenario(spec)) == dumps_scenario(random_scenario(spec))

    def test_every_state_rewarded(self):
        scenario = random_scenario(GenSpec(3, 3, 9, seed=4))
        assert sorted(scenario.reward_states()) == list(range(9))

    def test_single_reward(self):
        scenario = single_reward_scenario(GenSpec(6, 6, 4, seed=8))
        assert len(scenario.rewards) == 1

    @given(seeds)
    @settings(max_examples=200)
    def test_adjacent_pair(self, seed):
        scenario = adjacent_pair_scenario(GenSpec(6, 4, 1, seed=seed))
        first, second = scenario.reward_states()
        assert second in scenario.world.neighbors(first)
        validate_scenario(scenario)

    def test_adjacent_pair_needs_two_states(self):
        with pytest.raises(ValueError):
            adjacent_pair_scenario(GenSpec(1, 1, 1))

    def test_draw_reward_count(self):
        counts = {draw_reward_count(seed, 1, 10) for seed in range(200)}
        assert counts <= set(range(1, 11))
        assert draw_reward_count(17, 3, 3) == 3
