"""
Module: harness

This module times the exact solver against value iteration over seeded
scenario sweeps. The minimum wall time over the repetitions is recorded.
With several workers, scenario generation and the cross-solver checksum check
run on a process pool; the timed runs always happen afterwards in the parent,
one at a time, so no two timed solves overlap. Records come back in
(point, trial, solver) order.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor

import pandas as pd
from tqdm.auto import tqdm

from ..exceptions.exception import PeakflowError, SolverFailure
from ..generate.gen_spec import GenSpec, random_scenario
from ..generate.splitmix import derive_seed
from ..log.loggable import Loggable
from ..mdp.validation import validate_scenario
from ..solver.exact_solver import ExactSolver
from ..solver.value_iteration import ValueIterationSolver, ViConfig
from ..types.type_validation import is_scenario
from ..wrappers.wrappers import log_error, timer
from .records import SOLVER_IDS, BenchmarkRecord


def _make_solver(solver_id, vi_epsilon):
    if solver_id == "exact":
        return ExactSolver()
    if solver_id == "value_iteration":
        return ValueIterationSolver(ViConfig(epsilon=vi_epsilon))
    raise ValueError(f"unknown solver {solver_id!r}; expected one of {', '.join(SOLVER_IDS)}")


def time_solver(solver_id, scenario, repetitions=3, seed=0, vi_epsilon=1e-6):
    """
    Time one solver on one scenario.

    Arguments:
        solver_id (str): ``exact`` or ``value_iteration``.
        scenario (Scenario): A grid scenario.
        repetitions (int, optional): Number of timed runs. Defaults to 3.
        seed (int, optional): Seed the scenario was drawn from, recorded for replay.
        vi_epsilon (float, optional): Residual threshold of value iteration. Defaults to 1e-6.

    Returns:
        BenchmarkRecord: Minimum wall time over the runs, iteration count and checksum.

    Raises:
        SolverFailure: If the solver raises; the message names the seed.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    is_scenario(scenario, _raise=True)
    solver = _make_solver(solver_id, vi_epsilon)
    best = math.inf
    result = None
    try:
        validate_scenario(scenario)
        for _ in range(repetitions):
            start = time.perf_counter()
            result = solver.solve(scenario, validate=False)
            best = min(best, time.perf_counter() - start)
    except PeakflowError as e:
        raise SolverFailure(f"{solver_id} failed: {e.message}", seed=seed) from e
    world = scenario.world
    return BenchmarkRecord(
        solver=solver_id,
        width=world.width,
        height=world.height,
        rewards=len(scenario.rewards),
        gamma=float(scenario.gamma),
        seed=int(seed),
        wall_time_s=best,
        iters=int(result.iterations),
        checksum=result.values.checksum(),
    )


def checksum_tolerance(vi_epsilon, gamma, state_count):
    """Largest checksum gap allowed between the two solvers on one scenario."""
    return vi_epsilon * gamma / (1.0 - gamma) * state_count


def _failed_record(solver_id, gen, error):
    return BenchmarkRecord(
        solver=solver_id,
        width=gen.width,
        height=gen.height,
        rewards=gen.reward_count,
        gamma=gen.gamma,
        seed=gen.seed,
        wall_time_s=math.nan,
        iters=0,
        checksum=math.nan,
        error=str(error),
    )


def _agreement_warning(gen, checksums, vi_epsilon):
    if len(checksums) != 2:
        return None
    gap = abs(checksums["exact"] - checksums["value_iteration"])
    tolerance = checksum_tolerance(vi_epsilon, gen.gamma, gen.width * gen.height)
    if gap > tolerance:
        return f"seed {gen.seed}: checksum gap {gap:.3e} exceeds tolerance {tolerance:.3e}"
    return None


def _generate(gen, solvers):
    """Returns ``(scenario, None)`` or ``(None, (failed records, warnings))``."""
    try:
        return random_scenario(gen), None
    except (PeakflowError, ValueError) as e:
        return None, ([_failed_record(s, gen, e) for s in solvers], [f"seed {gen.seed}: {e}"])


def _time_scenario(gen, scenario, solvers, repetitions, vi_epsilon, check_agreement=True):
    records, warnings = [], []
    for solver_id in solvers:
        try:
            records.append(time_solver(solver_id, scenario, repetitions, gen.seed, vi_epsilon))
        except SolverFailure as e:
            records.append(_failed_record(solver_id, gen, e.message))
            warnings.append(e.message)
    if check_agreement:
        checksums = {r.solver: r.checksum for r in records if not r.failed}
        warning = _agreement_warning(gen, checksums, vi_epsilon)
        if warning is not None:
            warnings.append(warning)
    return records, warnings


def _run_task(task):
    """Generate, time and cross-check one scenario in the calling process."""
    gen, solvers, repetitions, vi_epsilon = task
    scenario, failed = _generate(gen, solvers)
    if scenario is None:
        return failed
    return _time_scenario(gen, scenario, solvers, repetitions, vi_epsilon)


def _prepare_task(task):
    """
    Untimed part of a task, run inside a worker process: generate the scenario
    and check that the solvers agree on it. Returns only data for the parent.
    """
    gen, solvers, _, vi_epsilon = task
    scenario, failed = _generate(gen, solvers)
    if scenario is None:
        return None, failed
    checksums = {}
    for solver_id in solvers:
        try:
            result = _make_solver(solver_id, vi_epsilon).solve(scenario)
        except PeakflowError:
            continue
        checksums[solver_id] = result.values.checksum()
    warning = _agreement_warning(gen, checksums, vi_epsilon)
    return scenario, ([], [] if warning is None else [warning])


def _sweep_tasks(spec):
    tasks = []
    for point in spec.sweep_points():
        for trial in range(spec.trials):
            gen = GenSpec(
                width=point.width,
                height=point.height,
                reward_count=point.reward_count,
                value_range=spec.value_range,
                gamma=point.gamma,
                seed=derive_seed(spec.seed, point.index, trial),
            )
            tasks.append((gen, spec.solvers, spec.repetitions, spec.vi_epsilon))
    return tasks


class Harness(Loggable):
    """
    Harness

    Runs benchmark sweeps and reports progress and failures.

    Usage Example:
        >>> harness = Harness(workers=4, logger=True)
        >>> records = harness.run(discount_sweep(trials=10))
        >>> summarize_records(records)
    """

    def __init__(self, workers=1, progress=True, logger=False):
        """
        Harness Class Constructor

        Arguments:
            workers (int, optional): Worker processes; 1 runs in-process. Defaults to 1.
            progress (bool, optional): Show a progress bar. Defaults to True.
            logger (logging.Logger or bool, optional): See Loggable. Defaults to False.
        """
        super().__init__(logger=logger, log_name="harness")
        self.workers = workers
        self.progress = progress

    @property
    def workers(self):
        """int: Number of worker processes."""
        return self.__workers

    @workers.setter
    def workers(self, workers):
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise ValueError("workers must be a positive integer")
        self.__workers = workers

    def _results(self, tasks):
        if self.workers == 1:
            for task in tasks:
                yield _run_task(task)
            return
        # the pool is shut down before the first timed run
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            prepared = list(pool.map(_prepare_task, tasks))
        for task, (scenario, outcome) in zip(tasks, prepared):
            if scenario is None:
                yield outcome
                continue
            gen, solvers, repetitions, vi_epsilon = task
            records, warnings = _time_scenario(gen, scenario, solvers, repetitions,
                                               vi_epsilon, check_agreement=False)
            yield records, outcome[1] + warnings

    @log_error("Error running benchmark sweep")
    @timer
    def run(self, spec):
        """
        Public method: run()
        Times every solver of ``spec`` on ``spec.trials`` scenarios per point.

        Arguments:
            spec (SweepSpec): The sweep.

        Returns:
            list: BenchmarkRecords ordered by point, trial and solver.
        """
        tasks = _sweep_tasks(spec)
        self.display_message(
            f"Running {spec.variable} sweep: {len(spec.points)} points x {spec.trials} trials"
        )
        records = []
        failures = 0
        with tqdm(total=len(tasks), desc="Running sweep", disable=not self.progress) as pbar:
            for task_records, warnings in self._results(tasks):
                records.extend(task_records)
                failures += sum(1 for record in task_records if record.failed)
                for warning in warnings:
                    self.display_message(warning, logging.WARNING)
                pbar.update(1)
        self.display_message(f"Sweep finished with {len(records)} records, {failures} failed")
        return records


def run_sweep(spec, workers=1, progress=True, logger=False):
    """
    Run a benchmark sweep.

    Arguments:
        spec (SweepSpec): The sweep.
        workers (int, optional): Worker processes. Defaults to 1.
        progress (bool, optional): Show a progress bar. Defaults to True.
        logger (logging.Logger or bool, optional): See Loggable.

    Returns:
        list: BenchmarkRecords ordered by point, trial and solver.
    """
    return Harness(workers=workers, progress=progress, logger=logger).run(spec)


def summarize_records(records):
    """
    Wall-time statistics per solver and sweep point.

    Arguments:
        records (list): BenchmarkRecords; failed records are ignored.

    Returns:
        pandas.DataFrame: One row per (solver, width, height, rewards, gamma)
        with columns ``mean``, ``std``, ``min`` and ``count``.
    """
    keys = ["solver", "width", "height", "rewards", "gamma"]
    frame = pd.DataFrame([r.to_dict() for r in records if not r.failed],
                         columns=keys + ["wall_time_s"])
    summary = frame.groupby(keys, sort=True)["wall_time_s"].agg(["mean", "std", "min", "count"])
    return summary.reset_index()
