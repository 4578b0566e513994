"""
Module: exact_solver

This module implements the exact peak-based solver for deterministic,
continuous, fully connected MDPs with sparse positive rewards.

The optimal value function is the point-wise maximum of the value functions
propagated from a small set of peaks. Each iteration selects one peak and
retires the rewards it collects:

    1. Precompute one Baseline per reward and one Combined per reward that has a
       mutually adjacent rewarded neighbour; these form the peak queue.
    2. Compute one Delta per remaining reward against the current values.
    3. Prune queued peaks that a neighbouring value already exceeds.
    4. Select the best candidate among the queue and the deltas.
    5. Retire its rewards, drop every queued peak that touches them,
       propagate the peak over the state space and take the point-wise maximum.

Propagation is closed form: a peak of height ``h`` at ``p`` contributes
``gamma ** delta(s, p) * h`` at ``s``, and distances are served by a
DistanceOracle so that every field is built at most once per solve.

The result is exact on grids. On general transition graphs it is a lower
bound on the optimal values: Combined peaks only pair mutually adjacent
rewards, so a best cycle through three or more rewards, or through two
rewards more than one step apart, is not represented.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Set, Tuple

import numpy as np

from ..distance.distance import DistanceOracle, gamma_power_table
from ..exceptions.exception import (
    NonAdjacentPeakError,
    SolverInvariantError,
    StructuralError,
)
from ..mdp.grid_world import GridWorld
from ..mdp.scenario import ValueFunction
from .base_solver import AbstractSolver
from .peak import Peak, PeakKind, PeakQueue


def _oracle_for(scenario, oracle):
    return oracle if oracle is not None else DistanceOracle(scenario.world)


def _power_table_for(scenario, power_table):
    if power_table is not None:
        return power_table
    return gamma_power_table(scenario.gamma, scenario.world.max_distance())


def cycle_height(reward, gamma, cycle_length):
    """
    Value of collecting ``reward`` every ``cycle_length`` steps forever,
    ``reward / (1 - gamma ** cycle_length)``. A state that cannot return to
    itself collects its reward once.
    """
    if cycle_length == float("inf"):
        return float(reward)
    return float(reward) / (1.0 - float(gamma) ** cycle_length)


def baseline_peak(reward, scenario, oracle=None):
    """
    Baseline peak of a single reward source.

    Arguments:
        reward (RewardSource): The reward.
        scenario (Scenario): The scenario.
        oracle (DistanceOracle, optional): Shared distance oracle.

    Returns:
        Peak: Baseline anchored at ``reward.state`` with value ``r / (1 - gamma^phi)``.
    """
    oracle = _oracle_for(scenario, oracle)
    phi = oracle.min_cycle(reward.state)
    return Peak(
        kind=PeakKind.BASELINE,
        anchor=int(reward.state),
        value=cycle_height(reward.value, scenario.gamma, phi),
        affected_rewards=frozenset({int(reward.state)}),
    )


def combined_peak(primary, secondary, scenario, oracle=None):
    """
    Combined peak of two mutually adjacent rewards, anchored at ``primary``.

    The agent alternates between the two states forever, so the value at the
    primary is ``Bp + gamma * Bs`` with ``B = r / (1 - gamma ** 2)``.

    Arguments:
        primary (RewardSource): The reward the peak is anchored at.
        secondary (RewardSource): The adjacent reward.
        scenario (Scenario): The scenario.
        oracle (DistanceOracle, optional): Shared distance oracle.

    Returns:
        Peak: Combined peak affecting both rewards.

    Raises:
        NonAdjacentPeakError: If the two states are not one step apart in both directions.
    """
    oracle = _oracle_for(scenario, oracle)
    p, s = int(primary.state), int(secondary.state)
    if p == s or oracle.distance(p, s) != 1 or oracle.distance(s, p) != 1:
        raise NonAdjacentPeakError(f"states {p} and {s} are not mutually adjacent")
    gamma = scenario.gamma
    primary_height = cycle_height(primary.value, gamma, 2)
    secondary_height = cycle_height(secondary.value, gamma, 2)
    return Peak(
        kind=PeakKind.COMBINED,
        anchor=p,
        value=primary_height + gamma * secondary_height,
        affected_rewards=frozenset({p, s}),
        secondary_anchor=s,
        primary_height=primary_height,
        secondary_height=secondary_height,
    )


def _mutual_reward_neighbors(state, reward_values, world):
    neighbor_lists = world.neighbor_lists()
    return [n for n in neighbor_lists[state]
            if n in reward_values and state in neighbor_lists[n]]


def precompute_peaks(scenario, oracle=None):
    """
    Build the peak queue: one Baseline per reward, plus one Combined per reward
    paired with its highest-valued mutually adjacent reward (lowest state on ties).

    Arguments:
        scenario (Scenario): A validated scenario.
        oracle (DistanceOracle, optional): Shared distance oracle.

    Returns:
        PeakQueue: The sorted candidates.
    """
    oracle = _oracle_for(scenario, oracle)
    reward_values = {int(r.state): r for r in scenario.rewards}
    peaks = []
    for reward in scenario.rewards:
        peaks.append(baseline_peak(reward, scenario, oracle))
        partners = _mutual_reward_neighbors(int(reward.state), reward_values, scenario.world)
        if partners:
            best = min(partners, key=lambda n: (-reward_values[n].value, n))
            peaks.append(combined_peak(reward, reward_values[best], scenario, oracle))
    return PeakQueue(peaks)


@dataclass
class SolveState:
    """
    SolveState

    Mutable state of one exact solve.

    Attributes:
        v (numpy.ndarray): Current value function, starts at zero.
        queue (PeakQueue): Baseline and Combined candidates still valid.
        remaining (set): Reward states not yet retired.
        processed (list): Selected peaks, in order.
        iteration (int): Number of peaks processed so far.
    """
    v: np.ndarray
    queue: PeakQueue
    remaining: Set[int]
    processed: List["ProcessedPeak"] = field(default_factory=list)
    iteration: int = 0


@dataclass(frozen=True)
class ProcessedPeak:
    """
    ProcessedPeak

    One audit-trail entry: the peak selected at ``iteration`` (1-based) and the
    rewards it retired.
    """
    kind: PeakKind
    anchor: int
    value: float
    iteration: int
    affected_rewards: frozenset
    secondary_anchor: Optional[int] = None

    @classmethod
    def from_peak(cls, peak, iteration):
        return cls(
            kind=peak.kind,
            anchor=peak.anchor,
            value=peak.value,
            iteration=iteration,
            affected_rewards=peak.affected_rewards,
            secondary_anchor=peak.secondary_anchor,
        )

    def to_dict(self):
        """dict: JSON-ready representation."""
        record = {
            "kind": self.kind.label,
            "anchor": self.anchor,
            "value": float(self.value),
            "iteration": self.iteration,
        }
        if self.secondary_anchor is not None:
            record["secondary_anchor"] = self.secondary_anchor
        return record


def audit_to_records(processed):
    """list: Audit trail as a list of dicts, one per processed peak."""
    return [entry.to_dict() for entry in processed]


def compute_deltas(state, scenario):
    """
    One Delta per remaining reward against the current values.

    A Delta's value is ``r + v[s]``: the reward is collected once and the agent
    continues along the current value function. Its selection priority is raised
    to the best neighbouring value, so a Delta never overtakes the peak it
    builds on.

    Arguments:
        state (SolveState): Current solve state.
        scenario (Scenario): The scenario.

    Returns:
        list: Delta peaks ordered by ``Peak.sort_key()``.
    """
    world = scenario.world
    neighbor_lists = world.neighbor_lists()
    reward_values = {int(r.state): float(r.value) for r in scenario.rewards}
    deltas = []
    for s in state.remaining:
        value = reward_values[s] + float(state.v[s])
        neighbors = neighbor_lists[s]
        best_neighbor = float(state.v[list(neighbors)].max()) if neighbors else 0.0
        deltas.append(Peak(
            kind=PeakKind.DELTA,
            anchor=s,
            value=value,
            affected_rewards=frozenset({s}),
            priority=max(value, best_neighbor),
        ))
    deltas.sort(key=Peak.sort_key)
    return deltas


def prune_invalid_peaks(state, scenario):
    """
    Drop queued Baseline and Combined peaks whose anchor has a neighbour with a
    strictly greater current value; such a peak is no longer a local maximum.

    Returns:
        list: The pruned peaks.
    """
    neighbor_lists = scenario.world.neighbor_lists()
    v = state.v

    def dominated(peak):
        neighbors = neighbor_lists[peak.anchor]
        return bool(neighbors) and float(v[list(neighbors)].max()) > peak.value

    return state.queue.remove_where(dominated)


def remove_affected_peaks(state, selected):
    """
    Retire the rewards of ``selected`` and drop every queued peak that shares
    one of them.

    Returns:
        list: The dropped peaks.

    Raises:
        SolverInvariantError: If ``selected`` affects a reward already retired.
    """
    if not selected.affected_rewards <= state.remaining:
        raise SolverInvariantError(
            f"{selected.describe()} affects retired rewards",
            diagnostics={"affected": sorted(selected.affected_rewards),
                         "remaining": sorted(state.remaining)},
        )
    state.remaining -= selected.affected_rewards
    return state.queue.remove_where(lambda peak: peak.touches(selected.affected_rewards))


def _propagate_array(peak, scenario, oracle, power_table):
    if peak.kind is PeakKind.COMBINED:
        gamma = float(scenario.gamma)
        enter_primary = oracle.discounts(peak.anchor, power_table) * (
            peak.primary_height + gamma * peak.secondary_height)
        enter_secondary = oracle.discounts(peak.secondary_anchor, power_table) * (
            peak.secondary_height + gamma * peak.primary_height)
        return np.maximum(enter_primary, enter_secondary)
    return oracle.discounts(peak.anchor, power_table) * peak.value


def propagate(peak, scenario, oracle=None, power_table=None):
    """
    Value function a single peak induces over the state space.

    Baseline and Delta peaks give ``gamma ** delta(s, anchor) * value``. A
    Combined peak takes the better of entering the two-state cycle at either
    end: ``max(gamma ** delta(s, p) * (Bp + gamma * Bs),
    gamma ** delta(s, q) * (Bq + gamma * Bp))``. On grids the two distances
    always differ by one, so this equals the sum
    ``gamma ** delta(s, p) * Bp + gamma ** delta(s, q) * Bq``. Unreachable
    states receive 0.

    Arguments:
        peak (Peak): The peak to propagate.
        scenario (Scenario): The scenario.
        oracle (DistanceOracle, optional): Shared distance oracle.
        power_table (numpy.ndarray, optional): Output of gamma_power_table().

    Returns:
        ValueFunction: The propagated values.
    """
    oracle = _oracle_for(scenario, oracle)
    power_table = _power_table_for(scenario, power_table)
    return ValueFunction(_propagate_array(peak, scenario, oracle, power_table))


def update_value_function(v, interim):
    """
    Point-wise maximum of two value functions.

    Raises:
        StructuralError: If the two tables differ in length.
    """
    current = np.asarray(v, dtype=np.float64)
    other = np.asarray(interim, dtype=np.float64)
    if current.shape != other.shape:
        raise StructuralError(
            f"cannot merge value tables of shapes {current.shape} and {other.shape}"
        )
    return ValueFunction(np.maximum(current, other))


def select_peak(state, deltas):
    """
    Best candidate among the queue head and the deltas, or None when there is none.
    """
    head = state.queue.head()
    best_delta = deltas[0] if deltas else None
    if head is None:
        return best_delta
    if best_delta is None:
        return head
    return head if head.sort_key() < best_delta.sort_key() else best_delta


@dataclass(frozen=True)
class ExactResult:
    """
    ExactResult

    Output of an exact solve.

    Attributes:
        values (ValueFunction): The optimal value function.
        processed (tuple): Audit trail of ProcessedPeak entries.
        iterations (int): Number of peaks processed (at most the number of rewards).
        candidate_evaluations (int): Precomputed peaks plus deltas evaluated.
        snapshots (tuple): Value tables after each iteration, when requested.
    """
    values: ValueFunction
    processed: Tuple[ProcessedPeak, ...]
    iterations: int
    candidate_evaluations: int
    snapshots: Tuple[ValueFunction, ...] = ()


def exact_solve_detailed(scenario, snapshots=False, logger=None, oracle=None):
    """
    Solve ``scenario`` exactly and return values, audit trail and counters.

    On transition graphs whose best cycle visits more than two rewards, or two
    rewards that are not mutually adjacent, the values are a lower bound
    rather than the optimum.

    Arguments:
        scenario (Scenario): A validated scenario.
        snapshots (bool, optional): Keep the value table after every iteration.
        logger (logging.Logger, optional): Receives one DEBUG line per iteration.
        oracle (DistanceOracle, optional): Shared distance oracle.

    Returns:
        ExactResult

    Raises:
        SolverInvariantError: If no candidate remains while rewards do, or the
            iteration count exceeds the number of rewards.
    """
    oracle = _oracle_for(scenario, oracle)
    power_table = _power_table_for(scenario, None)
    queue = precompute_peaks(scenario, oracle)
    state = SolveState(
        v=np.zeros(scenario.state_count, dtype=np.float64),
        queue=queue,
        remaining={int(r.state) for r in scenario.rewards},
    )
    reward_count = len(state.remaining)
    evaluations = len(queue)
    history = []

    while state.remaining:
        deltas = compute_deltas(state, scenario)
        evaluations += len(deltas)
        prune_invalid_peaks(state, scenario)
        selected = select_peak(state, deltas)
        if selected is None:
            raise SolverInvariantError(
                "no candidate peak left while rewards remain",
                diagnostics={"remaining": sorted(state.remaining)},
            )
        remove_affected_peaks(state, selected)
        interim = _propagate_array(selected, scenario, oracle, power_table)
        np.maximum(state.v, interim, out=state.v)
        state.iteration += 1
        if state.iteration > reward_count:
            raise SolverInvariantError(
                "exact solver exceeded one iteration per reward",
                diagnostics={"iterations": state.iteration, "rewards": reward_count},
            )
        state.processed.append(ProcessedPeak.from_peak(selected, state.iteration))
        if snapshots:
            history.append(ValueFunction(state.v))
        if logger is not None:
            logger.debug("iteration %d selected %s, %d rewards remaining",
                         state.iteration, selected.describe(), len(state.remaining))

    return ExactResult(
        values=ValueFunction(state.v),
        processed=tuple(state.processed),
        iterations=state.iteration,
        candidate_evaluations=evaluations,
        snapshots=tuple(history),
    )


def exact_solve(scenario):
    """
    Solve ``scenario`` exactly.

    Exact on grids; see exact_solve_detailed() for transition graphs.

    Arguments:
        scenario (Scenario): A validated scenario.

    Returns:
        tuple: ``(ValueFunction, list of ProcessedPeak)``.
    """
    result = exact_solve_detailed(scenario)
    return result.values, list(result.processed)


class ExactSolver(AbstractSolver):
    """
    ExactSolver

    Solver wrapper around exact_solve_detailed() used by the CLI and the
    benchmark harness.

    Usage Example:
        >>> solver = ExactSolver(logger=True)
        >>> result = solver.solve(scenario)
        >>> result.values.max(), result.iterations
    """

    name = "exact"

    def __init__(self, logger=False, snapshots=False, cache_capacity=1024):
        super().__init__(logger=logger)
        self.snapshots = snapshots
        self.cache_capacity = cache_capacity
        self.oracle = None

    def start_solve(self, scenario):
        self.oracle = DistanceOracle(scenario.world, capacity=self.cache_capacity)
        self.display_message(
            f"exact solve on {scenario.state_count} states with "
            f"{len(scenario.rewards)} rewards, gamma={scenario.gamma}", logging.DEBUG
        )
        if not isinstance(scenario.world, GridWorld) and len(scenario.rewards) > 1:
            self.display_message(
                "exact values on a transition graph are a lower bound when the best "
                "cycle visits more than two rewards or two rewards that are not "
                "mutually adjacent", logging.WARNING
            )

    def stop_solve(self):
        if self.oracle is not None:
            cache = self.oracle.cache
            self.display_message(
                f"distance cache: {len(cache)} fields, {cache.hits} hits, {cache.misses} misses",
                logging.DEBUG
            )
        self.oracle = None

    def execute(self, scenario):
        result = exact_solve_detailed(
            scenario,
            snapshots=self.snapshots,
            logger=self.logger if self.logger_is_set() else None,
            oracle=self.oracle,
        )
        self.display_message(
            f"exact solve processed {result.iterations} peaks "
            f"({result.candidate_evaluations} candidate evaluations)"
        )
        return result
