"""
Compiled exact-integer inner loops for the Gray-code search.

All arithmetic is int64; the parser's Σ|M_xy| < 2^62 guard bounds every
accumulator. Range scans release the GIL so worker threads run in parallel.
"""

import numpy as np
from numba import njit

from ..core.graycode import brgc_change_index, brgc_digit, dary_change_index, digit_at_power


@njit(cache=True, nogil=True)
def manhattan(vec, start):
    """Σ_{y >= start} |vec[y]|."""
    total = 0
    for y in range(start, vec.shape[0]):
        v = vec[y]
        total += v if v >= 0 else -v
    return total


@njit(cache=True, nogil=True)
def sign_value(acc, marginal):
    """L1: ‖m‖₁.  MARG: m₁ + Σ_{y>=2} |m_y|."""
    if marginal:
        return acc[0] + manhattan(acc, 1)
    return manhattan(acc, 0)


@njit(cache=True, nogil=True)
def add_scaled_row(acc, matrix, row, scale):
    for y in range(matrix.shape[1]):
        acc[y] += scale * matrix[row, y]


@njit(cache=True, nogil=True)
def accumulate_signs(matrix, signs):
    """m = aM for a ±1 vector a."""
    acc = np.zeros(matrix.shape[1], dtype=np.int64)
    for x in range(matrix.shape[0]):
        add_scaled_row(acc, matrix, x, signs[x])
    return acc


@njit(cache=True, nogil=True)
def accumulate_groups(matrix, labels, d):
    """Row (a) of the result is the sum of the matrix rows labelled a."""
    groups = np.zeros((d, matrix.shape[1]), dtype=np.int64)
    for x in range(matrix.shape[0]):
        label = labels[x]
        for y in range(matrix.shape[1]):
            groups[label, y] += matrix[x, y]
    return groups


@njit(cache=True, nogil=True)
def move_row(groups, norms, matrix, row, old_label, new_label):
    """Move one row between groups; refresh the two affected norms, return the value change."""
    before = norms[old_label] + norms[new_label]
    for y in range(matrix.shape[1]):
        groups[old_label, y] -= matrix[row, y]
        groups[new_label, y] += matrix[row, y]
    norms[old_label] = manhattan(groups[old_label], 0)
    norms[new_label] = manhattan(groups[new_label], 0)
    return norms[old_label] + norms[new_label] - before


@njit(cache=True, nogil=True)
def scan_sign_range(matrix, j_min, j_max, marginal):
    """
    Best (value, word) over BRGC words j_min..j_max for L1 (marginal=False) or MARG.

    Row 0 carries the fixed +1 entry, row x >= 1 follows Gray digit x-1.
    Ties keep the smallest word index.
    """
    n = matrix.shape[0]
    signs = np.empty(n, dtype=np.int64)
    signs[0] = 1
    for x in range(1, n):
        signs[x] = 2 * brgc_digit(x - 1, j_min) - 1
    acc = accumulate_signs(matrix, signs)
    best = sign_value(acc, marginal)
    best_word = j_min
    for j in range(j_min + 1, j_max + 1):
        i = brgc_change_index(j)
        sign = 2 * brgc_digit(i, j) - 1
        add_scaled_row(acc, matrix, i + 1, 2 * sign)
        value = sign_value(acc, marginal)
        if value > best:
            best = value
            best_word = j
    return best, best_word


@njit(cache=True, nogil=True)
def scan_dary_range(matrix, d, powers, j_min, j_max):
    """Best (value, word) over d-ary reflected Gray words j_min..j_max for L_d."""
    n = matrix.shape[0]
    labels = np.zeros(n, dtype=np.int64)
    for x in range(1, n):
        labels[x] = digit_at_power(d, x - 1, powers[x - 1], j_min)
    groups = accumulate_groups(matrix, labels, d)
    norms = np.empty(d, dtype=np.int64)
    value = 0
    for a in range(d):
        norms[a] = manhattan(groups[a], 0)
        value += norms[a]
    best = value
    best_word = j_min
    for j in range(j_min + 1, j_max + 1):
        i = dary_change_index(d, j)
        old_label = digit_at_power(d, i, powers[i], j - 1)
        new_label = digit_at_power(d, i, powers[i], j)
        value += move_row(groups, norms, matrix, i + 1, old_label, new_label)
        if value > best:
            best = value
            best_word = j
    return best, best_word
