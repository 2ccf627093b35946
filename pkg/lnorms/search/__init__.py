"""Iterative Gray-code search and the parallel scheduler."""

from .solver import NormResult, RunningState, StrategyVector, scan_range, state_at_word, step, value_from_scratch
from .scheduler import WorkRange, compute_norm, partition, partition_all, solve

__all__ = [
    'NormResult',
    'RunningState',
    'StrategyVector',
    'scan_range',
    'state_at_word',
    'step',
    'value_from_scratch',
    'WorkRange',
    'compute_norm',
    'partition',
    'partition_all',
    'solve',
]
