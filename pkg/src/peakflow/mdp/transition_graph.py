"""
Module: transition_graph

This module defines the TransitionGraph class, a general deterministic world
given directly as a ``state x action`` next-state table. ``-1`` encodes an
unavailable action. Full connectivity is checked as strong connectivity of the
directed transition graph using networkx.
"""

import networkx as nx
import numpy as np

from ..exceptions.exception import ScenarioValidationError
from .world import AbstractWorld, UNAVAILABLE


class TransitionGraph(AbstractWorld):
    """
    TransitionGraph

    A deterministic world defined by its next-state table.

    Usage Example:
        >>> ring = TransitionGraph.ring(4)
        >>> ring.transition(3, 0)
        0
        >>> ring.transition(0, 1)
        3
    """

    def __init__(self, next_state):
        """
        TransitionGraph Class Constructor

        Arguments:
            next_state (array-like): ``states x actions`` integer table.
                Entries are next-state ids or -1 for an unavailable action.

        Raises:
            ScenarioValidationError: If the table is not a non-empty 2-D table of
                integers within ``-1..states-1``.
        """
        super().__init__()
        table = np.asarray(next_state)
        problems = []
        if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 1:
            raise ScenarioValidationError(["transition table must be a non-empty states x actions table"])
        if not np.issubdtype(table.dtype, np.integer):
            if not np.all(np.isfinite(table)) or not np.all(np.equal(np.mod(table, 1), 0)):
                problems.append("transition table entries must be integers")
        if not problems:
            table = table.astype(np.int64)
            bad = (table < UNAVAILABLE) | (table >= table.shape[0])
            if bad.any():
                s, a = (int(i) for i in np.argwhere(bad)[0])
                problems.append(f"next state {int(table[s, a])} at state {s}, action {a} is not a state")
        if problems:
            raise ScenarioValidationError(problems)
        self.__source = table.copy()
        self.__graph = None

    @classmethod
    def ring(cls, n=4):
        """
        Public method: ring()
        Builds the bidirectional ring where action 0 increments and action 1
        decrements the state number modulo ``n``.

        Arguments:
            n (int, optional): Number of states. Defaults to 4.

        Returns:
            TransitionGraph: The ring world.
        """
        states = np.arange(n, dtype=np.int64)
        return cls(np.stack([(states + 1) % n, (states - 1) % n], axis=1))

    @property
    def state_count(self):
        return int(self.__source.shape[0])

    @property
    def action_count(self):
        return int(self.__source.shape[1])

    def __eq__(self, other):
        if not isinstance(other, TransitionGraph):
            return NotImplemented
        return np.array_equal(self.next_state_table(), other.next_state_table())

    def __hash__(self):
        return hash(("graph", self.next_state_table().tobytes(), self.next_state_table().shape))

    def __repr__(self):
        return f"TransitionGraph(states={self.state_count}, actions={self.action_count})"

    def _build_table(self):
        return self.__source

    def max_distance(self):
        return self.state_count - 1

    def digraph(self):
        """
        Public method: digraph()
        Returns the transition structure as a ``networkx.DiGraph`` (built once).
        """
        if self.__graph is None:
            graph = nx.DiGraph()
            graph.add_nodes_from(range(self.state_count))
            graph.add_edges_from(self.edges())
            self.__graph = graph
        return self.__graph

    def is_fully_connected(self):
        return nx.is_strongly_connected(self.digraph())

    def unreachable_pair(self):
        """
        Public method: unreachable_pair()
        Names one ``(source, target)`` pair where ``target`` cannot be reached
        from ``source``, or None when the graph is strongly connected.
        """
        graph = self.digraph()
        if nx.is_strongly_connected(graph):
            return None
        reachable = nx.descendants(graph, 0) | {0}
        for target in range(self.state_count):
            if target not in reachable:
                return 0, target
        ancestors = nx.ancestors(graph, 0) | {0}
        for source in range(self.state_count):
            if source not in ancestors:
                return source, 0
        return None
