"""
Module: base_solver

This module defines the AbstractSolver class for creating solvers.
AbstractSolver provides a common interface for preparing, executing and
cleaning up a solve. Subclasses must implement the abstract methods
start_solve(), stop_solve() and execute() to provide solver-specific
functionality; solve() runs the three in order with error logging and timing.
"""

from abc import ABC, abstractmethod

from ..log.loggable import Loggable
from ..mdp.validation import validate_scenario
from ..types.type_validation import is_scenario
from ..wrappers.wrappers import log_error, timer


class AbstractSolver(Loggable, ABC):
    """
    AbstractSolver

    An abstract class for defining the structure of a solver. Subclasses provide
    ``name`` (the solver id used in benchmark records) and implement start_solve(),
    stop_solve() and execute().
    """

    name = "abstract"

    def __init__(self, logger=False):
        super().__init__(logger=logger, log_name=f"{self.name}_solver")

    @abstractmethod
    def start_solve(self, scenario):
        """
        Abstract method: start_solve()
        This method should contain logic to initialize the solver before execution.
        """

    @abstractmethod
    def stop_solve(self):
        """
        Abstract method: stop_solve()
        This method should contain logic to clean up the solver after execution has completed.
        """

    @abstractmethod
    def execute(self, scenario):
        """
        Abstract method: execute()
        This method should contain the main functionality of the solver and return its result.
        """

    @log_error("Error solving scenario")
    @timer
    def solve(self, scenario, validate=True):
        """
        Public method: solve()
        Validates ``scenario`` (unless ``validate`` is False), then runs
        start_solve(), execute() and stop_solve().

        Arguments:
            scenario (Scenario): The scenario to solve.
            validate (bool, optional): Whether to validate first. Defaults to True.

        Returns:
            The result object of execute().
        """
        is_scenario(scenario, _raise=True)
        if validate:
            validate_scenario(scenario)
        self.start_solve(scenario)
        try:
            return self.execute(scenario)
        finally:
            self.stop_solve()
