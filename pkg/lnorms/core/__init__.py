"""Matrices, Gray codes, constants and errors for lnorms."""

from .constants import (
    WordConstants,
    OracleConstants,
    BenchConstants,
    ExitCodes,
    ModeTag,
    SolveMode,
    RunConfig
)
from .graycode import GrayWord, power_table, reflect_construct, word_at
from .matrix import IntMatrix, PreprocessReport, check_feasible, max_rows_for, parse_matrix, preprocess

__all__ = [
    'WordConstants',
    'OracleConstants',
    'BenchConstants',
    'ExitCodes',
    'ModeTag',
    'SolveMode',
    'RunConfig',
    'GrayWord',
    'power_table',
    'reflect_construct',
    'word_at',
    'IntMatrix',
    'PreprocessReport',
    'check_feasible',
    'max_rows_for',
    'parse_matrix',
    'preprocess',
]
