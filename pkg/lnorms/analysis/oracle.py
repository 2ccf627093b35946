"""
Naive brute force for L1, Lmarg and L_d.

Every admissible strategy (first entry fixed) is visited in plain counting
order and evaluated from scratch with n·m work, with no Gray ordering and no
incremental updates. It shares no code with the iterative search so agreement
between the two is real evidence. The optimum is reported in reflected-Gray
word coordinates (via an independent ranking) so results compare one to one.
"""

import logging
from typing import Sequence

import numpy as np
from numba import njit

from ..core.constants import ModeTag, OracleConstants, SolveMode
from ..core.errors import TooLargeForOracleError
from ..core.matrix import IntMatrix, identity_report
from ..search.solver import NormResult, StrategyVector

_logger = logging.getLogger(__name__)


@njit(cache=True)
def _reflected_rank(digits, d):
    """Word index of a digit vector (least-significant digit first) in the reflected code."""
    rank = 0
    for i in range(digits.shape[0] - 1, -1, -1):
        g = digits[i]
        if rank % 2 == 1:
            g = d - 1 - g
        rank = rank * d + g
    return rank


@njit(cache=True, nogil=True)
def _naive_sign_search(matrix, marginal):
    n, m = matrix.shape
    count = 1 << (n - 1)
    signs = np.empty(n, dtype=np.int64)
    digits = np.zeros(n - 1, dtype=np.int64)
    best_digits = np.zeros(n - 1, dtype=np.int64)
    products = np.empty(m, dtype=np.int64)
    best = 0
    best_rank = -1
    signs[0] = 1
    for c in range(count):
        for x in range(1, n):
            bit = (c >> (x - 1)) & 1
            digits[x - 1] = bit
            signs[x] = 2 * bit - 1
        for y in range(m):
            total = 0
            for x in range(n):
                total += signs[x] * matrix[x, y]
            products[y] = total
        value = products[0] if marginal else abs(products[0])
        for y in range(1, m):
            value += abs(products[y])
        if best_rank < 0 or value >= best:
            rank = _reflected_rank(digits, 2)
            if best_rank < 0 or value > best or rank < best_rank:
                best = value
                best_rank = rank
                best_digits[:] = digits
    return best, best_rank, best_digits


@njit(cache=True, nogil=True)
def _naive_dary_search(matrix, d, count):
    n, m = matrix.shape
    labels = np.zeros(n, dtype=np.int64)
    digits = np.zeros(n - 1, dtype=np.int64)
    best_digits = np.zeros(n - 1, dtype=np.int64)
    best = 0
    best_rank = -1
    for c in range(count):
        rest = c
        for x in range(1, n):
            digits[x - 1] = rest % d
            labels[x] = digits[x - 1]
            rest //= d
        value = 0
        for a in range(d):
            for y in range(m):
                total = 0
                for x in range(n):
                    if labels[x] == a:
                        total += matrix[x, y]
                value += abs(total)
        if best_rank < 0 or value >= best:
            rank = _reflected_rank(digits, d)
            if best_rank < 0 or value > best or rank < best_rank:
                best = value
                best_rank = rank
                best_digits[:] = digits
    return best, best_rank, best_digits


def rank_reflected(digits: Sequence[int], d: int) -> int:
    """Word index of a digit vector (least-significant first) in the d-ary reflected code."""
    return int(_reflected_rank(np.asarray(digits, dtype=np.int64), d))


def oracle_solve(matrix: IntMatrix, mode: SolveMode) -> NormResult:
    """
    Exhaustive from-scratch maximum of the norm under `mode` (no preprocessing).

    Ties are broken toward the smallest reflected-Gray word index, matching the
    iterative search.
    """
    report = identity_report(matrix, mode)
    if matrix.is_empty:
        return NormResult(mode=mode, d=mode.d, value=0, argmax_word=0,
                          strategy=StrategyVector(mode, ()), report=report)
    count = mode.d ** (matrix.rows - 1)
    if count > OracleConstants.MAX_WORDS:
        raise TooLargeForOracleError(
            f"oracle would visit {count} strategies, above its limit of {OracleConstants.MAX_WORDS}"
        )
    _logger.debug("oracle %s on %dx%d: %d strategies", mode.label, matrix.rows, matrix.cols, count)

    if mode.is_sign_mode:
        value, rank, digits = _naive_sign_search(matrix.entries, mode.tag is ModeTag.MARG)
        entries = (1,) + tuple(2 * int(g) - 1 for g in digits)
    else:
        value, rank, digits = _naive_dary_search(matrix.entries, mode.d, count)
        entries = (0,) + tuple(int(g) for g in digits)
    return NormResult(mode=mode, d=mode.d, value=int(value), argmax_word=int(rank),
                      strategy=StrategyVector(mode, entries), report=report)
