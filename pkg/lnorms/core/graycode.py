"""
Closed-form access to binary and d-ary reflected Gray codes.

Digit indices are least-significant-first: digit 0 is the one that changes most
often. Word j of the binary reflected Gray code (BRGC) has digit

    G(i, j) = floor((j + 2^i) / 2^(i+1)) mod 2

and word j of the d-ary reflected code has digit S[floor(j / d^i) mod 2d] with
S = (0, 1, ..., d-1, d-1, ..., 1, 0). The scalar queries are compiled with numba
so the search kernels call exactly the same code as the Python API.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numba import njit

from .errors import IndexOutOfRangeError, SizeTooLargeError

MAX_CONSTRUCT_WORDS = 3 ** 12


@njit(cache=True)
def brgc_digit(i, j):
    """Digit i of BRGC word j, using shifts and masks only."""
    return ((j + (1 << i)) >> (i + 1)) & 1


@njit(cache=True)
def brgc_change_index(j):
    """Digit where BRGC word j differs from word j-1: trailing zero count of j."""
    if j < 1:
        raise ValueError("change index is defined for j >= 1")
    i = 0
    while (j & 1) == 0:
        j >>= 1
        i += 1
    return i


@njit(cache=True)
def reflected_symbol(d, k):
    """Entry k of S = (0, 1, ..., d-1, d-1, ..., 1, 0)."""
    if k < d:
        return k
    return 2 * d - 1 - k


@njit(cache=True)
def digit_at_power(d, i, power, j):
    """Digit i of word j given power = d^i (looked up from a power table)."""
    if d == 2:
        return brgc_digit(i, j)
    return reflected_symbol(d, (j // power) % (2 * d))


@njit(cache=True)
def dary_digit(d, i, j):
    """Digit i of word j of the d-ary reflected Gray code."""
    power = 1
    for _ in range(i):
        power *= d
    return digit_at_power(d, i, power, j)


@njit(cache=True)
def dary_change_index(d, j):
    """min{i : floor(j / d^i) mod d != 0}, the digit where word j differs from word j-1."""
    if j < 1:
        raise ValueError("change index is defined for j >= 1")
    if d == 2:
        return brgc_change_index(j)
    i = 0
    while j % d == 0:
        j //= d
        i += 1
    return i


def power_table(d: int, h: int) -> np.ndarray:
    """Powers d^0 .. d^h as int64; raises OverflowError past the word size."""
    return np.array([d ** i for i in range(h + 1)], dtype=np.int64)


def word_count(d: int, h: int) -> int:
    """Number of words of an h-digit d-ary code."""
    return d ** h


@dataclass(frozen=True)
class GrayWord:
    """One word of an h-digit d-ary reflected Gray code."""
    d: int
    h: int
    j: int
    digits: Tuple[int, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.digits, dtype=np.int64)


def word_at(d: int, h: int, j: int) -> GrayWord:
    """Reconstruct word j from the closed form, one digit query per position."""
    if d < 2:
        raise ValueError(f"alphabet size must be >= 2, got {d}")
    if h < 0:
        raise ValueError(f"digit count must be >= 0, got {h}")
    total = word_count(d, h)
    if not 0 <= j < total:
        raise IndexOutOfRangeError(f"word index {j} outside [0, {total}) for d={d}, h={h}")
    if d == 2:
        digits = tuple(int(brgc_digit(i, j)) for i in range(h))
    else:
        digits = tuple(int(dary_digit(d, i, j)) for i in range(h))
    return GrayWord(d=d, h=h, j=j, digits=digits)


def reflect_construct(d: int, h: int) -> List[Tuple[int, ...]]:
    """
    Build the full reflected code recursively.

    The (h+1)-digit code is d copies of the h-digit code, every other copy
    reflected, each copy extended by its new most-significant digit. Used as
    ground truth for the closed forms.
    """
    if d < 2:
        raise ValueError(f"alphabet size must be >= 2, got {d}")
    if word_count(d, h) > MAX_CONSTRUCT_WORDS:
        raise SizeTooLargeError(
            f"{d}^{h} words exceed the construction limit of {MAX_CONSTRUCT_WORDS}"
        )
    words: List[Tuple[int, ...]] = [()]
    for _ in range(h):
        words = [
            word + (value,)
            for value in range(d)
            for word in (words if value % 2 == 0 else reversed(words))
        ]
    return words
