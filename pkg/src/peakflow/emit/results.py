"""
Module: results

Entry points for writing and reading benchmark results in CSV or JSON.
"""

import json

import pandas as pd

from ..bench.records import RECORD_COLUMNS, BenchmarkRecord
from ..exceptions.exception import ResultsError
from ..utils.utils import check_file
from .csv_emitter import CSVEmitter
from .json_emitter import JSONEmitter

EMITTERS = {"csv": CSVEmitter, "json": JSONEmitter}


def get_emitter(fmt, exists="replace"):
    """
    Returns the emitter for ``fmt`` (``csv`` or ``json``).
    """
    if fmt not in EMITTERS:
        raise ValueError(f"format must be one of {', '.join(EMITTERS)}")
    return EMITTERS[fmt](exists=exists)


def emit_results(records, fmt="csv", destination=None, exists="replace"):
    """
    Write benchmark records.

    Arguments:
        records (list): BenchmarkRecords, at least one.
        fmt (str, optional): ``csv`` or ``json``. Defaults to ``csv``.
        destination (str, optional): Output path; when None the text is returned.
        exists (str, optional): ``append``, ``fail`` or ``replace``. Defaults to ``replace``.

    Returns:
        str or None: The serialized records when ``destination`` is None.

    Raises:
        ResultsError: On an empty record list or a failed write (names the destination).
    """
    return get_emitter(fmt, exists).emit(records, destination)


def read_results(path):
    """
    Read records written by emit_results(); the format follows the file extension.

    Raises:
        ResultsError: If the file is missing or lacks a record column.
    """
    if not check_file(path):
        raise ResultsError("results file does not exist", destination=path)
    if str(path).endswith(".json"):
        with open(path, "r", encoding="utf-8") as handle:
            rows = json.load(handle)
    else:
        rows = pd.read_csv(path, float_precision="round_trip").to_dict(orient="records")
    for row in rows:
        missing = [column for column in RECORD_COLUMNS if column not in row]
        if missing:
            raise ResultsError(f"results lack columns {', '.join(missing)}", destination=path)
    return [BenchmarkRecord.from_dict(row) for row in rows]
