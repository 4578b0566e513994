"""
Module: json_emitter

This module writes benchmark records as a JSON array of objects whose keys are
the record column names. Failed solves have ``null`` timing and checksum.
"""

import json
import math

import pandas as pd

from .emitter import ResultsEmitter


def _json_row(row):
    return {key: None if isinstance(value, float) and math.isnan(value) else value
            for key, value in row.items()}


class JSONEmitter(ResultsEmitter):
    """
    JSONEmitter

    Writes benchmark records to a JSON file. ``append`` extends the array already
    stored in the destination.
    """

    file_extension = ".json"

    def render(self, frame):
        rows = [_json_row(row) for row in frame.to_dict(orient="records")]
        return json.dumps(rows, indent=2) + "\n"

    def write_frame(self, frame, destination):
        if self.appending(destination):
            with open(destination, "r", encoding="utf-8") as handle:
                existing = pd.DataFrame(json.load(handle), columns=list(frame.columns))
            frame = pd.concat([existing, frame], ignore_index=True)
        with open(destination, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(self.render(frame))
