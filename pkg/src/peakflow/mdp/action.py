"""
Module: action

Grid-world actions. The enum order is also the argmax tie-break order
used by policy extraction: Up < Down < Left < Right.
"""

from enum import IntEnum


class Action(IntEnum):
    """
    Action

    The four grid-world moves. ``Up`` decreases the row coordinate ``y``.
    """
    UP = 0
    DOWN = 1
    LEFT = 2
    RIGHT = 3

    @property
    def offset(self):
        """
        Returns:
            tuple: The ``(dx, dy)`` displacement of the move.
        """
        return _OFFSETS[self]

    @property
    def label(self):
        """
        Returns:
            str: The capitalised action name, e.g. ``"Up"``.
        """
        return self.name.capitalize()


_OFFSETS = {
    Action.UP: (0, -1),
    Action.DOWN: (0, 1),
    Action.LEFT: (-1, 0),
    Action.RIGHT: (1, 0),
}
