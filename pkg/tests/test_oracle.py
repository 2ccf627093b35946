"""The naive enumerator and its agreement with the Gray-code search."""

import numpy as np
import pytest

from lnorms.analysis.oracle import oracle_solve, rank_reflected
from lnorms.core.constants import ModeTag, SolveMode
from lnorms.core.errors import FeasibilityError, TooLargeForOracleError
from lnorms.core.graycode import word_at
from lnorms.core.matrix import IntMatrix
from lnorms.search.scheduler import solve

MODES = [SolveMode.l1(), SolveMode.marg(), SolveMode.ld(2), SolveMode.ld(3), SolveMode.ld(4)]


def test_worked_example(worked_example):
    result = oracle_solve(worked_example, SolveMode.l1())
    assert (result.value, result.argmax_word) == (29, 3)
    assert result.strategy.entries == (1, -1, 1)
    assert result.report.steps == []


@pytest.mark.parametrize("mode", MODES + [SolveMode.ld(5)], ids=lambda mode: mode.label)
def test_single_entry(mode):
    assert oracle_solve(IntMatrix.from_rows([[5]]), mode).value == 5


def test_empty_matrix():
    result = oracle_solve(IntMatrix.from_rows([], cols=0), SolveMode.ld(3))
    assert result.value == 0
    assert result.strategy.entries == ()


def test_size_guard():
    with pytest.raises(TooLargeForOracleError):
        oracle_solve(IntMatrix(np.ones((30, 2), dtype=np.int64)), SolveMode.l1())
    with pytest.raises(FeasibilityError):
        oracle_solve(IntMatrix(np.ones((19, 2), dtype=np.int64)), SolveMode.ld(3))


class TestRankReflected:

    def test_ternary_column(self):
        assert rank_reflected((2, 2, 1), 3) == 9

    @pytest.mark.parametrize("d,h", [(2, 6), (3, 4), (4, 3), (5, 3)])
    def test_inverts_word_at(self, d, h):
        for j in range(d ** h):
            assert rank_reflected(word_at(d, h, j).digits, d) == j

    def test_no_digits(self):
        assert rank_reflected((), 2) == 0


def test_matches_the_gray_code_search(random_matrices):
    for index, matrix in enumerate(random_matrices(1000)):
        mode = MODES[index % len(MODES)]
        expected = oracle_solve(matrix, mode)
        result = solve(matrix, mode, workers=1 + index % 3)
        assert result.same_optimum(expected), (mode.label, matrix)


def test_norm_chain(random_matrices):
    for matrix in random_matrices(300):
        l1 = oracle_solve(matrix, SolveMode.l1()).value
        l2 = oracle_solve(matrix, SolveMode.ld(2)).value
        l3 = oracle_solve(matrix, SolveMode.ld(3)).value
        total = matrix.abs_sum()
        assert l1 <= l2 <= l3 <= total, matrix
        if matrix.rows <= 3:
            assert l3 == total
        if matrix.rows <= 2:
            assert l2 == total
        assert oracle_solve(matrix.transpose(), SolveMode.l1()).value == l1


@pytest.mark.parametrize("mode", MODES, ids=lambda mode: mode.label)
def test_permutation_invariance(mode, random_matrices, rng):
    # the marginal row and column stay in place
    first = 1 if mode.tag is ModeTag.MARG else 0
    for matrix in random_matrices(60):
        value = oracle_solve(matrix, mode).value
        rows = list(range(first)) + list(first + rng.permutation(matrix.rows - first))
        cols = list(range(min(first, matrix.cols))) + \
            list(min(first, matrix.cols) + rng.permutation(matrix.cols - min(first, matrix.cols)))
        shuffled = IntMatrix(matrix.entries[np.ix_(rows, cols)])
        assert oracle_solve(shuffled, mode).value == value
