"""
Module: main

Command-line frontend of Peakflow.

Subcommands:
    - solve:  solve a scenario file with the exact solver or value iteration.
    - verify: compare the exact solver against value iteration on seeded scenarios.
    - bench:  time both solvers over a sweep and write CSV or JSON records.
    - gen:    write a seeded random scenario file.

Exit codes: 0 success, 1 invalid input, 2 solver failure, 3 verification failure.
"""

import argparse
import json
import logging
import sys

import numpy as np

from ..bench.harness import Harness, summarize_records
from ..bench.records import discount_sweep, load_sweep_spec, rewards_sweep, states_sweep
from ..emit.results import emit_results
from ..exceptions.exception import (
    BoundsError,
    ConvergenceError,
    PeakflowError,
    ResultsError,
    ScenarioFormatError,
    ScenarioValidationError,
    SolverFailure,
    SolverInvariantError,
)
from ..generate.gen_spec import GenSpec, draw_reward_count, random_scenario
from ..generate.splitmix import derive_seed
from ..log.logger import CustomLogger
from ..mdp.scenario_io import dumps_scenario, load_scenario
from ..mdp.validation import validate_scenario
from ..solver.exact_solver import ExactSolver, audit_to_records
from ..solver.value_iteration import (
    ValueIterationSolver,
    ViConfig,
    extract_policy,
    policy_to_actions,
)
from ..utils.utils import ensure_parent_directory, generate_key, parse_grid, parse_range

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2
EXIT_VERIFY = 3

INPUT_ERRORS = (ScenarioValidationError, ScenarioFormatError, BoundsError, ResultsError,
                ValueError, OSError)
SOLVER_ERRORS = (ConvergenceError, SolverInvariantError, SolverFailure)

SOLVER_CHOICES = {"exact": "exact", "vi": "value_iteration", "value_iteration": "value_iteration"}
SWEEPS = {"rewards": rewards_sweep, "states": states_sweep, "discount": discount_sweep}


def exit_code_for(error):
    """
    Map an exception to the exit-code contract.

    Arguments:
        error (Exception): The exception raised by a subcommand.

    Returns:
        int: EXIT_SOLVER for solver failures, EXIT_INPUT otherwise.
    """
    if isinstance(error, SOLVER_ERRORS):
        return EXIT_SOLVER
    if isinstance(error, PeakflowError) and isinstance(error.__cause__, SOLVER_ERRORS):
        return EXIT_SOLVER
    if isinstance(error, INPUT_ERRORS):
        return EXIT_INPUT
    return EXIT_SOLVER


def error_message(error):
    """
    One-line report of ``error`` for stderr. Solver invariant failures carry
    their diagnostics, also when wrapped by the benchmark harness.
    """
    message = error.message if isinstance(error, PeakflowError) else str(error)
    source = error if isinstance(error, SolverInvariantError) else error.__cause__
    if isinstance(source, SolverInvariantError) and source.diagnostics:
        details = ", ".join(f"{key}={value}" for key, value in sorted(source.diagnostics.items()))
        message = f"{message} [{details}]"
    return message


def _write_output(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    ensure_parent_directory(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _seed(value):
    number = int(value, 0)
    if not 0 <= number < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return number


def _make_solver(name, args, logger):
    if SOLVER_CHOICES[name] == "exact":
        return ExactSolver(logger=logger or False)
    config = ViConfig(epsilon=args.epsilon if args.epsilon is not None else 1e-8,
                      max_iterations=args.max_iterations)
    return ValueIterationSolver(config, logger=logger or False)


def cmd_solve(args, logger=None):
    """Solve one scenario file and print its values, policy or a summary."""
    scenario = validate_scenario(load_scenario(args.scenario))
    solver = _make_solver(args.solver, args, logger)
    result = solver.solve(scenario, validate=False)
    values = result.values
    document = {"solver": solver.name, "states": scenario.state_count}
    if args.output == "values-json":
        document["values"] = values.to_list()
    elif args.output == "policy-json":
        policy = extract_policy(values, scenario)
        document["policy"] = policy_to_actions(policy, scenario.world)
    if args.audit and solver.name == "exact":
        document["audit"] = audit_to_records(result.processed)
    if args.output == "summary":
        lines = [
            f"solver: {solver.name}",
            f"scenario: {generate_key(dumps_scenario(scenario))}",
            f"states: {scenario.state_count}",
            f"rewards: {len(scenario.rewards)}",
            f"gamma: {scenario.gamma}",
            f"iterations: {result.iterations}",
            f"max value: {values.max():.10g}",
            f"checksum: {values.checksum():.10g}",
        ]
        if "audit" in document:
            lines.append("audit: " + json.dumps(document["audit"]))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(document, indent=2) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def _verify_cases(args):
    if args.scenario is not None:
        yield "scenario file " + args.scenario, validate_scenario(load_scenario(args.scenario))
        return
    width, height = parse_grid(args.grid)
    lo, hi = parse_range(args.rewards, cast=int)
    hi = min(hi, width * height)
    if lo < 1 or lo > hi:
        raise ValueError(f"reward range {args.rewards} does not fit a {args.grid} grid")
    values = parse_range(args.values)
    for trial in range(args.count):
        seed = derive_seed(args.seed, 0, trial)
        spec = GenSpec(width, height, draw_reward_count(seed, lo, hi), values, args.gamma, seed)
        yield f"seed {seed}", random_scenario(spec)


def cmd_verify(args, logger=None):
    """Compare the exact solver against value iteration; exit 3 on any deviation."""
    epsilon = args.epsilon if args.epsilon is not None else 1e-8
    exact = ExactSolver(logger=logger or False)
    oracle = ValueIterationSolver(ViConfig(epsilon=epsilon), logger=logger or False)
    worst = 0.0
    checked = 0
    for label, scenario in _verify_cases(args):
        tolerance = args.tolerance
        if tolerance is None:
            tolerance = oracle.config.error_bound(scenario.gamma)
        try:
            v_exact = np.asarray(exact.solve(scenario).values)
            v_oracle = np.asarray(oracle.solve(scenario).values)
        except PeakflowError as e:
            raise SolverFailure(f"solver failed on {label}: {e.message}") from e
        deviation = float(np.max(np.abs(v_exact - v_oracle)))
        worst = max(worst, deviation)
        checked += 1
        if deviation > tolerance:
            print(f"FAIL {label}: max deviation {deviation:.3e} > tolerance {tolerance:.3e}")
            return EXIT_VERIFY
    print(f"OK {checked} scenarios, max deviation {worst:.3e}")
    return EXIT_OK


def _sweep_from_args(args):
    if args.spec is not None:
        spec = load_sweep_spec(args.spec)
    elif args.points:
        spec = SWEEPS[args.sweep](points=[p.strip() for p in args.points.split(",")])
    else:
        spec = SWEEPS[args.sweep]()
    return spec.with_overrides(trials=args.trials, repetitions=args.repetitions, seed=args.seed)


def cmd_bench(args, logger=None):
    """Run a sweep, write the records and print the wall-time summary."""
    spec = _sweep_from_args(args)
    harness = Harness(workers=args.workers, progress=not args.no_progress, logger=logger or False)
    records = harness.run(spec)
    text = emit_results(records, args.format, args.out)
    if text is not None:
        sys.stdout.write(text)
    summary = summarize_records(records)
    stream = sys.stderr if args.out is None else sys.stdout
    stream.write(summary.to_string(index=False) + "\n")
    failed = [record for record in records if record.failed]
    for record in failed:
        stream.write(f"failed: {record.solver} seed {record.seed}: {record.error}\n")
    return EXIT_SOLVER if failed else EXIT_OK


def cmd_gen(args, logger=None):
    """Write a seeded random grid scenario."""
    if args.spec is not None:
        with open(args.spec, "r", encoding="utf-8") as handle:
            try:
                document = json.load(handle)
            except json.JSONDecodeError as e:
                raise ScenarioFormatError(f"invalid generation spec JSON: {e.msg}",
                                          e.lineno, e.colno) from e
        spec = GenSpec.from_dict(document)
    else:
        width, height = parse_grid(args.grid)
        spec = GenSpec(width, height, args.rewards, parse_range(args.values), args.gamma, args.seed)
    scenario = random_scenario(spec)
    if logger is not None:
        logger.info("generated %dx%d scenario with %d rewards from seed %d",
                    spec.width, spec.height, spec.reward_count, spec.seed)
    _write_output(dumps_scenario(scenario), args.out)
    return EXIT_OK


def build_parser():
    """
    Build the argument parser with the solve, verify, bench and gen subcommands.
    """
    parser = argparse.ArgumentParser(
        prog="peakflow",
        description="Exact solver and value-iteration oracle for deterministic sparse-reward MDPs.",
    )
    parser.add_argument("--log-file", default=None, help="write log records to this file")
    parser.add_argument("--verbose", action="store_true", help="log per-iteration details")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="solve a scenario file")
    solve.add_argument("--scenario", required=True, help="scenario JSON file")
    solve.add_argument("--solver", choices=sorted(SOLVER_CHOICES), default="exact")
    solve.add_argument("--epsilon", type=float, default=None,
                       help="value iteration residual threshold (default 1e-8)")
    solve.add_argument("--max-iterations", type=_positive_int, default=1_000_000)
    solve.add_argument("--output", choices=("values-json", "policy-json", "summary"),
                       default="values-json")
    solve.add_argument("--audit", action="store_true", help="include the processed peaks")
    solve.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    solve.set_defaults(handler=cmd_solve)

    verify = commands.add_parser("verify", help="check the exact solver against value iteration")
    verify.add_argument("--scenario", default=None, help="verify a single scenario file")
    verify.add_argument("--grid", default="10x10", help="grid size WxH")
    verify.add_argument("--rewards", default="1..10", help="reward count N or LO..HI")
    verify.add_argument("--gamma", type=float, default=0.9)
    verify.add_argument("--values", default="1..10", help="reward value range LO..HI")
    verify.add_argument("--seed", type=_seed, default=0)
    verify.add_argument("--count", type=int, default=100)
    verify.add_argument("--tolerance", type=float, default=None,
                        help="allowed deviation (default epsilon*gamma/(1-gamma))")
    verify.add_argument("--epsilon", type=float, default=None,
                        help="value iteration residual threshold (default 1e-8)")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="time both solvers over a sweep")
    source = bench.add_mutually_exclusive_group(required=True)
    source.add_argument("--sweep", choices=("rewards", "states", "discount"))
    source.add_argument("--spec", default=None, help="sweep spec JSON file")
    bench.add_argument("--points", default=None, help="comma-separated sweep values")
    bench.add_argument("--trials", type=_positive_int, default=None)
    bench.add_argument("--repetitions", type=_positive_int, default=None)
    bench.add_argument("--workers", type=_positive_int, default=1)
    bench.add_argument("--seed", type=_seed, default=None)
    bench.add_argument("--format", choices=("csv", "json"), default="csv")
    bench.add_argument("--no-progress", action="store_true")
    bench.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    bench.set_defaults(handler=cmd_bench)

    gen = commands.add_parser("gen", help="write a seeded random scenario")
    gen.add_argument("--spec", default=None, help="generation spec JSON file")
    gen.add_argument("--grid", default="50x50", help="grid size WxH")
    gen.add_argument("--rewards", type=int, default=5)
    gen.add_argument("--gamma", type=float, default=0.9)
    gen.add_argument("--values", default="1..10", help="reward value range LO..HI")
    gen.add_argument("--seed", type=_seed, default=0)
    gen.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    gen.set_defaults(handler=cmd_gen)
    return parser


def _configure_logger(args):
    if args.log_file is None and not args.verbose:
        return None
    level = logging.DEBUG if args.verbose else logging.INFO
    return CustomLogger("cli", log_file_path=args.log_file, level=level).logger


def main(argv=None):
    """
    Run the command line.

    Arguments:
        argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        int: The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.count < 1:
        parser.error("--count must be a positive integer")
    logger = _configure_logger(args)
    try:
        return args.handler(args, logger)
    except (PeakflowError, ValueError, OSError) as e:
        message = error_message(e)
        if logger is not None:
            logger.error("%s failed: %s", args.command, message)
        print(f"error: {message}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
