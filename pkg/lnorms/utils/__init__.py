"""Utility modules for lnorms."""

from .environment import (
    configure_threading_environment,
    available_cpus,
    default_worker_count,
    describe_cpu,
    initialize_environment
)

__all__ = [
    'configure_threading_environment',
    'available_cpus',
    'default_worker_count',
    'describe_cpu',
    'initialize_environment',
]
