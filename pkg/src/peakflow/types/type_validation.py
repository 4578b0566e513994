"""
Module: type_validation.py

This module provides utility functions for type validation.

The functions in this module check whether a given object is an instance of one of
the problem-instance classes (Scenario, world, ValueFunction, Policy) before it is
handed to a solver.
"""

from ..mdp.scenario import Policy as base_policy
from ..mdp.scenario import Scenario as base_scenario
from ..mdp.scenario import ValueFunction as base_value_function
from ..mdp.world import AbstractWorld as base_world


def is_scenario(scenario, _raise=False):
    """
    Check if the provided object is an instance of the Scenario class.

    Arguments:
        scenario (object): The object to check.
        _raise (bool, optional): If True, raise a TypeError when the check fails.
            Defaults to False.

    Returns:
        bool: True if the object is a Scenario, otherwise False.

    Raises:
        TypeError: If _raise is True and the object is not a Scenario.
    """
    if not isinstance(scenario, base_scenario):
        if _raise:
            raise TypeError("Not of type Scenario")
        return False
    return True

def is_world(world, _raise=False):
    """
    Check if the provided object is a GridWorld or TransitionGraph.

    Raises:
        TypeError: If _raise is True and the object is not a world.
    """
    if not isinstance(world, base_world):
        if _raise:
            raise TypeError("Not of type World")
        return False
    return True

def is_value_function(values, _raise=False):
    """
    Check if the provided object is an instance of the ValueFunction class.

    Raises:
        TypeError: If _raise is True and the object is not a ValueFunction.
    """
    if not isinstance(values, base_value_function):
        if _raise:
            raise TypeError("Not of type ValueFunction")
        return False
    return True

def is_policy(policy, _raise=False):
    """
    Check if the provided object is an instance of the Policy class.

    Raises:
        TypeError: If _raise is True and the object is not a Policy.
    """
    if not isinstance(policy, base_policy):
        if _raise:
            raise TypeError("Not of type Policy")
        return False
    return True
