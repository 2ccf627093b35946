"""Shared fixtures for the lnorms test suite."""

import numpy as np
import pytest

from lnorms.core.constants import SolveMode
from lnorms.core.matrix import IntMatrix

WORKED_EXAMPLE = [[4, -7, -2], [-5, 2, 3], [9, -1, 4]]
REDUCIBLE_EXAMPLE = [[0, 0, 0, 0], [4, -7, 2, -1], [8, -14, 4, -2], [1, -3, 4, 4]]

ALL_MODES = [SolveMode.l1(), SolveMode.marg(), SolveMode.ld(2), SolveMode.ld(3)]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: timing benchmark, deselect with -m 'not slow'")


@pytest.fixture
def worked_example():
    return IntMatrix.from_rows(WORKED_EXAMPLE)


@pytest.fixture
def reducible_example():
    return IntMatrix.from_rows(REDUCIBLE_EXAMPLE)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_matrix(rng, max_rows=6, max_cols=6, low=-9, high=9, min_rows=1, min_cols=1):
    rows = int(rng.integers(min_rows, max_rows + 1))
    cols = int(rng.integers(min_cols, max_cols + 1))
    return IntMatrix(rng.integers(low, high + 1, size=(rows, cols)))


def planted_matrix(rng, max_rows=6, max_cols=6):
    """
    Random matrix with planted zero lines and proportional pairs.

    Multiples use factors from {-3, -2, -1, 2, 3, 1/2}; the half factor is only
    applied to even lines so entries stay integral.
    """
    entries = rng.integers(-9, 10, size=(int(rng.integers(1, max_rows + 1)),
                                         int(rng.integers(1, max_cols + 1)))).astype(np.int64)
    for _ in range(int(rng.integers(0, 4))):
        kind = rng.integers(0, 4)
        n, m = entries.shape
        if kind == 0 and n > 1:
            entries[rng.integers(0, n)] = 0
        elif kind == 1 and m > 1:
            entries[:, rng.integers(0, m)] = 0
        elif kind == 2 and n > 1:
            src, dst = rng.choice(n, size=2, replace=False)
            entries[dst] = _scaled(entries[src], rng)
        elif kind == 3 and m > 1:
            src, dst = rng.choice(m, size=2, replace=False)
            entries[:, dst] = _scaled(entries[:, src], rng)
    return IntMatrix(entries)


def _scaled(line, rng):
    if np.all(line % 2 == 0) and rng.random() < 0.3:
        return line // 2
    return line * int(rng.choice([-3, -2, -1, 2, 3]))


@pytest.fixture
def random_matrices(rng):
    """Factory: count plain random matrices of bounded size."""
    def make(count, **kwargs):
        return [random_matrix(rng, **kwargs) for _ in range(count)]
    return make


@pytest.fixture
def planted_matrices(rng):
    """Factory: count random matrices with planted zero and proportional lines."""
    def make(count, **kwargs):
        return [planted_matrix(rng, **kwargs) for _ in range(count)]
    return make
