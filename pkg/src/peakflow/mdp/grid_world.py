"""
Module: grid_world

This module defines the GridWorld class, a rectangular grid of cells where each
cell is one state. States are numbered row-major (``y * width + x``) and the
four moves that would leave the grid are removed from the action set rather
than turned into self-loops, so no grid state has a self-transition.
"""

import numpy as np

from ..exceptions.exception import BoundsError
from .action import Action
from .world import AbstractWorld, UNAVAILABLE
from .transition_graph import TransitionGraph


class GridWorld(AbstractWorld):
    """
    GridWorld

    A ``width x height`` grid world with the actions Up, Down, Left and Right.

    Usage Example:
        >>> world = GridWorld(5, 5)
        >>> world.state_index(2, 3)
        17
        >>> world.coordinates(17)
        (2, 3)
    """

    def __init__(self, width, height):
        """
        GridWorld Class Constructor

        Arguments:
            width (int): Number of columns, at least 1.
            height (int): Number of rows, at least 1.

        Raises:
            TypeError: If a side is not an integer.
            BoundsError: If a side is smaller than 1.
        """
        super().__init__()
        if isinstance(width, bool) or isinstance(height, bool):
            raise TypeError("grid sides must be integers")
        if int(width) != width or int(height) != height:
            raise TypeError("grid sides must be integers")
        if width < 1 or height < 1:
            raise BoundsError(f"grid sides must be positive, got {width}x{height}")
        self.__width = int(width)
        self.__height = int(height)

    @property
    def width(self):
        """int: Number of columns."""
        return self.__width

    @property
    def height(self):
        """int: Number of rows."""
        return self.__height

    @property
    def state_count(self):
        return self.__width * self.__height

    @property
    def action_count(self):
        return len(Action)

    def __eq__(self, other):
        if not isinstance(other, GridWorld):
            return NotImplemented
        return (self.width, self.height) == (other.width, other.height)

    def __hash__(self):
        return hash(("grid", self.width, self.height))

    def __repr__(self):
        return f"GridWorld(width={self.width}, height={self.height})"

    def state_index(self, x, y):
        """
        Public method: state_index()
        Maps a cell coordinate to its state id.

        Arguments:
            x (int): Column, ``0 <= x < width``.
            y (int): Row, ``0 <= y < height``.

        Returns:
            int: ``y * width + x``.

        Raises:
            BoundsError: If the coordinate is outside the grid.
        """
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise BoundsError(f"cell ({x}, {y}) outside the {self.width}x{self.height} grid")
        return int(y) * self.width + int(x)

    def coordinates(self, s):
        """
        Public method: coordinates()
        Inverse of state_index().

        Arguments:
            s (int): The state id.

        Returns:
            tuple: ``(x, y)``.
        """
        self.check_state(s)
        y, x = divmod(int(s), self.width)
        return x, y

    def coordinate_arrays(self):
        """
        Public method: coordinate_arrays()
        Returns the ``x`` and ``y`` coordinates of every state as int64 arrays.
        """
        states = np.arange(self.state_count, dtype=np.int64)
        return states % self.width, states // self.width

    def available_actions(self, s):
        return tuple(Action(a) for a in super().available_actions(s))

    def max_distance(self):
        return self.width + self.height - 2

    def is_fully_connected(self):
        return True

    def _build_table(self):
        xs, ys = self.coordinate_arrays()
        table = np.full((self.state_count, self.action_count), UNAVAILABLE, dtype=np.int64)
        for action in Action:
            dx, dy = action.offset
            nx, ny = xs + dx, ys + dy
            inside = (nx >= 0) & (nx < self.width) & (ny >= 0) & (ny < self.height)
            table[inside, action] = ny[inside] * self.width + nx[inside]
        return table

    def to_transition_graph(self):
        """
        Public method: to_transition_graph()
        Returns the same world as a general TransitionGraph (action index = Action value).
        """
        return TransitionGraph(np.array(self.next_state_table()))
