"""Naive oracle and benchmarking tools for lnorms."""

from .oracle import oracle_solve, rank_reflected
from .comparison import (
    BenchRow,
    ScalingMetrics,
    ScalingStudy,
    bench_pair
)

__all__ = [
    'oracle_solve',
    'rank_reflected',
    'BenchRow',
    'ScalingMetrics',
    'ScalingStudy',
    'bench_pair',
]
