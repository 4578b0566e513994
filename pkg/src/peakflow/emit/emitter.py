"""
Module: emitter

This module defines the ResultsEmitter class, an abstract base class for writing
benchmark records to a destination file. ResultsEmitter validates the ``exists``
parameter, which decides what happens when the destination already exists, and
leaves the format-specific serialization to its subclasses.
"""

import os
from abc import ABC, abstractmethod

import pandas as pd

from ..exceptions.exception import ResultsError
from ..utils.utils import check_file, ensure_parent_directory
from ..bench.records import RECORD_COLUMNS

EXISTS_MODES = ("append", "fail", "replace")


class ResultsEmitter(ABC):
    """
    ResultsEmitter

    An abstract class for writing benchmark records. Subclasses implement
    render() and write_frame().
    """

    file_extension = ""

    def __init__(self, exists="replace"):
        """
        ResultsEmitter Class Constructor

        Arguments:
            exists (str, optional): ``append``, ``fail`` or ``replace``. Defaults to ``replace``.
        """
        self.exists = self.__check_exists_parameter(exists)

    def __check_exists_parameter(self, exists):
        if exists not in EXISTS_MODES:
            raise ValueError("exists param must be either 'append', 'fail' or 'replace'")
        return exists

    @staticmethod
    def to_frame(records):
        """
        Public method: to_frame()
        Returns the records as a DataFrame with exactly the emitted columns.

        Raises:
            ResultsError: If ``records`` is empty.
        """
        if not records:
            raise ResultsError("no records")
        return pd.DataFrame([record.to_dict() for record in records], columns=list(RECORD_COLUMNS))

    def emit(self, records, destination=None):
        """
        Public method: emit()
        Writes ``records`` to ``destination``, or returns them as text when
        ``destination`` is None.

        Raises:
            ResultsError: If there are no records, the destination exists in
                ``fail`` mode, or the write fails.
        """
        frame = self.to_frame(records)
        if destination is None:
            return self.render(frame)
        if self.exists == "fail" and check_file(destination):
            raise ResultsError("destination already exists", destination=destination)
        try:
            ensure_parent_directory(destination)
            self.write_frame(frame, destination)
        except OSError as e:
            raise ResultsError(f"cannot write results ({e.strerror or e})",
                               destination=destination) from e
        return None

    def appending(self, destination):
        """bool: True when rows are added to an existing destination."""
        return self.exists == "append" and check_file(destination) \
            and os.path.getsize(destination) > 0

    @abstractmethod
    def render(self, frame):
        """
        Abstract method: render()
        Returns the frame serialized as text.
        """

    @abstractmethod
    def write_frame(self, frame, destination):
        """
        Abstract method: write_frame()
        Writes the frame to ``destination`` honouring the ``exists`` mode.
        """
