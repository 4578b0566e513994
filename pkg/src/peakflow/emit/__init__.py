"""
Module: emit

This module writes benchmark records to CSV or JSON and reads them back.
"""
from .emitter import ResultsEmitter
from .csv_emitter import CSVEmitter
from .json_emitter import JSONEmitter
from .results import get_emitter
from .results import emit_results
from .results import read_results

__all__ = [
    "ResultsEmitter",
    "CSVEmitter",
    "JSONEmitter",
    "get_emitter",
    "emit_results",
    "read_results",
]
