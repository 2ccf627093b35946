"""
Norm strategies: one class per solve mode.

Implements the Strategy pattern so the solver and scheduler never branch on the
mode. Each strategy knows how Gray digits map onto strategy entries, how to
accumulate the running vectors from scratch, how one Gray step updates them,
and which compiled kernel scans a word range.
"""

from abc import ABC, abstractmethod
from typing import Sequence, Tuple

import numpy as np

from ..core.constants import ModeTag, SolveMode
from ..core.errors import DimensionMismatchError
from . import kernels


class NormStrategy(ABC):
    """
    Abstract base class for per-mode evaluation.

    Running vectors are kept as a 2-D array (one row per group; sign modes use
    a single row m = aM) with one contribution per row.
    """

    fixed_entry: int = 0

    def __init__(self, mode: SolveMode):
        self.mode = mode

    @property
    def d(self) -> int:
        return self.mode.d

    @abstractmethod
    def entry_from_digit(self, digit: int) -> int:
        """Strategy entry for a Gray digit value."""

    def entries_from_digits(self, digits: Sequence[int]) -> Tuple[int, ...]:
        return (self.fixed_entry,) + tuple(self.entry_from_digit(int(g)) for g in digits)

    @abstractmethod
    def validate(self, entries: Sequence[int], rows: int) -> None:
        """Raise DimensionMismatchError for inadmissible entries."""

    @abstractmethod
    def accumulate(self, matrix: np.ndarray, entries: np.ndarray) -> Tuple[np.ndarray, np.ndarray, int]:
        """From-scratch running vectors, per-vector contributions and value."""

    @abstractmethod
    def advance(self, matrix: np.ndarray, vectors: np.ndarray, contributions: np.ndarray,
                value: int, row: int, old_digit: int, new_digit: int) -> int:
        """Update vectors in place for one changed digit; return the new value."""

    @abstractmethod
    def scan(self, matrix: np.ndarray, powers: np.ndarray, j_min: int, j_max: int) -> Tuple[int, int]:
        """Best (value, word index) over an inclusive word range."""

    def _check_length(self, entries: Sequence[int], rows: int) -> None:
        if len(entries) != rows:
            raise DimensionMismatchError(
                f"strategy has {len(entries)} entries but the matrix has {rows} rows"
            )


class SignStrategy(NormStrategy):
    """±1 strategies with a = 2G - 1 (L1 and MARG share this code path)."""

    fixed_entry = 1
    marginal = False

    def entry_from_digit(self, digit: int) -> int:
        return 2 * digit - 1

    def validate(self, entries, rows):
        self._check_length(entries, rows)
        if any(a not in (-1, 1) for a in entries):
            raise DimensionMismatchError(f"{self.mode.label} strategies take values ±1, got {list(entries)}")

    def accumulate(self, matrix, entries):
        acc = kernels.accumulate_signs(matrix, entries)
        value = int(kernels.sign_value(acc, self.marginal))
        return acc.reshape(1, -1), np.array([value], dtype=np.int64), value

    def advance(self, matrix, vectors, contributions, value, row, old_digit, new_digit):
        acc = vectors[0]
        kernels.add_scaled_row(acc, matrix, row, 2 * self.entry_from_digit(new_digit))
        value = int(kernels.sign_value(acc, self.marginal))
        contributions[0] = value
        return value

    def scan(self, matrix, powers, j_min, j_max):
        value, word = kernels.scan_sign_range(matrix, j_min, j_max, self.marginal)
        return int(value), int(word)


class L1Strategy(SignStrategy):
    """L1: maximise ‖aM‖₁ over sign vectors."""


class MarginalStrategy(SignStrategy):
    """Lmarg: first column enters unsigned, a₁ = +1."""
    marginal = True


class LdStrategy(NormStrategy):
    """L_d: rows assigned to d message labels, value Σ_a ‖m_a‖₁."""

    fixed_entry = 0

    def entry_from_digit(self, digit: int) -> int:
        return digit

    def validate(self, entries, rows):
        self._check_length(entries, rows)
        if any(not 0 <= a < self.d for a in entries):
            raise DimensionMismatchError(f"L{self.d} labels must lie in [0, {self.d}), got {list(entries)}")

    def accumulate(self, matrix, entries):
        groups = kernels.accumulate_groups(matrix, entries, self.d)
        norms = np.array([kernels.manhattan(groups[a], 0) for a in range(self.d)], dtype=np.int64)
        return groups, norms, int(norms.sum())

    def advance(self, matrix, vectors, contributions, value, row, old_digit, new_digit):
        delta = kernels.move_row(vectors, contributions, matrix, row, old_digit, new_digit)
        return value + int(delta)

    def scan(self, matrix, powers, j_min, j_max):
        value, word = kernels.scan_dary_range(matrix, self.d, powers, j_min, j_max)
        return int(value), int(word)


def strategy_for(mode: SolveMode) -> NormStrategy:
    """Factory: the strategy object evaluating `mode`."""
    if mode.tag is ModeTag.L1:
        return L1Strategy(mode)
    if mode.tag is ModeTag.MARG:
        return MarginalStrategy(mode)
    return LdStrategy(mode)
