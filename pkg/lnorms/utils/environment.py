"""
Environment configuration for lnorms.

Thread-pool settings and hardware queries used to size the worker pool.
"""

import os
import platform
from pathlib import Path
from typing import Optional


def configure_threading_environment() -> None:
    """
    Pin native BLAS/OpenMP pools to one thread.

    Parallelism lives in the scheduler's worker threads; nested native pools
    would oversubscribe the cores. Must run before numpy is imported to take
    effect; explicit user settings are kept.
    """
    for variable in ('OMP_NUM_THREADS', 'MKL_NUM_THREADS', 'OPENBLAS_NUM_THREADS',
                     'VECLIB_MAXIMUM_THREADS'):
        os.environ.setdefault(variable, '1')


def available_cpus() -> int:
    """CPUs this process may run on (affinity mask when the OS exposes one)."""
    if hasattr(os, 'sched_getaffinity'):
        return max(len(os.sched_getaffinity(0)), 1)
    return os.cpu_count() or 1


def default_worker_count(d: int, cpus: Optional[int] = None) -> int:
    """
    Available CPUs rounded down to a power of d (at least 1).

    Power-of-d worker counts start every range on a group boundary of the Gray
    code, so all workers hit the same change digits step by step.
    """
    cpus = available_cpus() if cpus is None else cpus
    workers = 1
    while workers * d <= cpus:
        workers *= d
    return workers


def describe_cpu() -> str:
    """Human-readable CPU model for benchmark headers."""
    cpuinfo = Path('/proc/cpuinfo')
    if cpuinfo.exists():
        for line in cpuinfo.read_text(errors='ignore').splitlines():
            if line.lower().startswith('model name'):
                return line.split(':', 1)[1].strip()
    return platform.processor() or platform.machine() or 'unknown CPU'


def initialize_environment() -> None:
    """
    Initialize the runtime environment for lnorms.

    Called on package import, before any scientific computing imports.
    """
    configure_threading_environment()
