"""
Module: records

This module defines the benchmark record, the sweep specification and the
three standard sweeps (reward count, state count and discount factor).
"""

import json
import math
from dataclasses import asdict, dataclass, field, replace
from typing import Optional, Tuple

from ..exceptions.exception import ScenarioFormatError
from ..generate.splitmix import MASK64
from ..utils.utils import check_file, parse_grid

RECORD_COLUMNS = (
    "solver", "width", "height", "rewards", "gamma", "seed", "wall_time_s", "iters", "checksum",
)
SOLVER_IDS = ("exact", "value_iteration")
SWEEP_VARIABLES = ("rewards", "states", "discount")


def _float_or_nan(value):
    return math.nan if value is None else float(value)


@dataclass(frozen=True)
class BenchmarkRecord:
    """
    BenchmarkRecord

    One timed solve. ``wall_time_s`` is the minimum over repetitions, ``iters``
    the processed peaks (exact) or Bellman backups (value iteration) and
    ``checksum`` the sum of the value function. Failed solves carry ``error``
    and NaN timing and checksum.
    """
    solver: str
    width: int
    height: int
    rewards: int
    gamma: float
    seed: int
    wall_time_s: float
    iters: int
    checksum: float
    error: Optional[str] = field(default=None, compare=False)

    @property
    def failed(self):
        """bool: True when the solve raised."""
        return self.error is not None

    @property
    def state_count(self):
        """int: Number of grid states."""
        return self.width * self.height

    def to_dict(self):
        """dict: The nine emitted columns, in order."""
        row = asdict(self)
        return {column: row[column] for column in RECORD_COLUMNS}

    @classmethod
    def from_dict(cls, row):
        """Rebuild a record from an emitted row."""
        wall_time = _float_or_nan(row["wall_time_s"])
        checksum = _float_or_nan(row["checksum"])
        return cls(
            solver=str(row["solver"]),
            width=int(row["width"]),
            height=int(row["height"]),
            rewards=int(row["rewards"]),
            gamma=float(row["gamma"]),
            seed=int(row["seed"]),
            wall_time_s=wall_time,
            iters=int(row["iters"]),
            checksum=checksum,
            error="failed" if math.isnan(wall_time) or math.isnan(checksum) else None,
        )


@dataclass(frozen=True)
class SweepPoint:
    """
    SweepPoint

    Fixed parameters of one point of a sweep.
    """
    index: int
    width: int
    height: int
    reward_count: int
    gamma: float


@dataclass(frozen=True)
class SweepSpec:
    """
    SweepSpec

    A benchmark sweep: one variable runs over ``points`` while the others stay fixed.

    Attributes:
        variable (str): ``rewards``, ``states`` or ``discount``.
        points (tuple): Reward counts, ``(width, height)`` pairs or discount factors.
        width (int): Fixed grid width. Defaults to 50.
        height (int): Fixed grid height. Defaults to 50.
        reward_count (int): Fixed reward count. Defaults to 5.
        gamma (float): Fixed discount factor. Defaults to 0.9.
        value_range (tuple): Reward value range. Defaults to (1.0, 10.0).
        trials (int): Scenarios per point. Defaults to 50.
        repetitions (int): Timed runs per solve, the minimum is kept. Defaults to 3.
        seed (int): Base seed. Defaults to 0.
        vi_epsilon (float): Residual threshold of value iteration. Defaults to 1e-6.
        solvers (tuple): Solver ids to time. Defaults to both.
    """
    variable: str
    points: Tuple
    width: int = 50
    height: int = 50
    reward_count: int = 5
    gamma: float = 0.9
    value_range: Tuple[float, float] = (1.0, 10.0)
    trials: int = 50
    repetitions: int = 3
    seed: int = 0
    vi_epsilon: float = 1e-6
    solvers: Tuple[str, ...] = SOLVER_IDS

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"sweep variable must be one of {', '.join(SWEEP_VARIABLES)}")
        points = tuple(self._normalize_point(point) for point in self.points)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "solvers", tuple(self.solvers))
        object.__setattr__(self, "value_range", tuple(float(v) for v in self.value_range))
        if len(points) < 2:
            raise ValueError("a sweep needs at least two points")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.repetitions < 1:
            raise ValueError("repetitions must be positive")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not self.vi_epsilon > 0.0:
            raise ValueError("vi_epsilon must be positive")
        unknown = [solver for solver in self.solvers if solver not in SOLVER_IDS]
        if unknown or not self.solvers:
            raise ValueError(f"solvers must be drawn from {', '.join(SOLVER_IDS)}")
        for point in self.sweep_points():
            if not 1 <= point.reward_count <= point.width * point.height:
                raise ValueError(
                    f"{point.reward_count} rewards do not fit a {point.width}x{point.height} grid"
                )
            if not 0.0 < point.gamma < 1.0:
                raise ValueError("gamma must lie in (0,1)")

    def _normalize_point(self, point):
        if self.variable == "states":
            if isinstance(point, str) and "x" in point.lower():
                return parse_grid(point)
            if isinstance(point, (int, str)):
                return (int(point), int(point))
            width, height = point
            return (int(width), int(height))
        if self.variable == "rewards":
            return int(point)
        return float(point)

    def sweep_points(self):
        """
        Public method: sweep_points()
        Returns the SweepPoint of every value of the sweep variable, in order.
        """
        points = []
        for index, point in enumerate(self.points):
            width, height = self.width, self.height
            reward_count, gamma = self.reward_count, self.gamma
            if self.variable == "rewards":
                reward_count = point
            elif self.variable == "states":
                width, height = point
            else:
                gamma = point
            points.append(SweepPoint(index, width, height, reward_count, gamma))
        return points

    def with_overrides(self, **changes):
        """SweepSpec: A copy with the given fields replaced (None values are ignored)."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    @classmethod
    def from_dict(cls, document):
        """
        Build a SweepSpec from a JSON object whose keys are the field names;
        ``variable`` and ``points`` are required.

        Raises:
            ScenarioFormatError: If a required key is missing or the document is malformed.
        """
        if not isinstance(document, dict):
            raise ScenarioFormatError("sweep spec must be a JSON object")
        missing = [key for key in ("variable", "points") if key not in document]
        if missing:
            raise ScenarioFormatError(f"sweep spec is missing {', '.join(missing)}")
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(document) - known)
        if unknown:
            raise ScenarioFormatError(f"sweep spec has unknown keys {', '.join(unknown)}")
        try:
            return cls(**document)
        except TypeError as e:
            raise ScenarioFormatError(f"sweep spec has a malformed field: {e}") from e


def load_sweep_spec(path):
    """
    Read a SweepSpec from a JSON file.

    Raises:
        ScenarioFormatError: If the file is not valid JSON or not a sweep spec.
        FileNotFoundError: If the file does not exist.
    """
    if not check_file(path):
        raise FileNotFoundError(f"sweep spec {path} does not exist")
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioFormatError(f"invalid sweep spec JSON: {e.msg}", e.lineno, e.colno) from e
    return SweepSpec.from_dict(document)


def rewards_sweep(points=(1, 5, 10, 20), **fixed):
    """SweepSpec: Varying number of reward sources on a 50x50 grid, gamma 0.9."""
    return SweepSpec(variable="rewards", points=tuple(points), **fixed)


def states_sweep(points=(10, 20, 30, 40, 50), **fixed):
    """SweepSpec: Varying square grid side with 5 rewards, gamma 0.9."""
    return SweepSpec(variable="states", points=tuple(points), **fixed)


def discount_sweep(points=(0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99), **fixed):
    """SweepSpec: Varying discount factor on a 50x50 grid with 5 rewards."""
    return SweepSpec(variable="discount", points=tuple(points), **fixed)
