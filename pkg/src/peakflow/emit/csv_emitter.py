"""
Module: csv_emitter

This module writes benchmark records as CSV: a header row with the nine record
columns, ``.`` as decimal separator and line feed terminators.
"""

from .emitter import ResultsEmitter


class CSVEmitter(ResultsEmitter):
    """
    CSVEmitter

    Writes benchmark records to a CSV file. In ``append`` mode the header is only
    written when the file is new.
    """

    file_extension = ".csv"

    def render(self, frame):
        return frame.to_csv(index=False, lineterminator="\n")

    def write_frame(self, frame, destination):
        appending = self.appending(destination)
        frame.to_csv(destination,
                     mode=self.map_exists_parameter(),
                     header=not appending,
                     index=False,
                     lineterminator="\n")

    def map_exists_parameter(self):
        """
        Public method: map_exists_parameter()
        Maps the exists parameter to the file mode used by ``to_csv``.

        Returns:
            str: 'a' for append, 'x' for fail, 'w' for replace.
        """
        if self.exists == "append":
            return 'a'
        if self.exists == "fail":
            return 'x'
        return 'w'
