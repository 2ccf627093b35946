"""
Iterative evaluation of L1, Lmarg and L_d values along a reflected Gray code.

Matrix row x >= 1 (0-based) follows Gray digit x-1; row 0 carries the fixed
entry (+1 for sign modes, label 0 for L_d). Word 0 in L1 is therefore
(+1, -1, ..., -1).
"""

from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.constants import SolveMode
from ..core.errors import DimensionMismatchError, NonConsecutiveStepError
from ..core.graycode import GrayWord, dary_change_index, dary_digit, power_table, word_at
from ..core.matrix import IntMatrix, PreprocessReport
from ..strategies.modes import strategy_for

if TYPE_CHECKING:
    from .scheduler import WorkRange

EMPTY_RANGE_VALUE = float("-inf")


@dataclass(frozen=True)
class StrategyVector:
    """Signs (L1, MARG) or message labels (L_d), one per matrix row."""
    mode: SolveMode
    entries: Tuple[int, ...]

    @classmethod
    def from_word(cls, mode: SolveMode, word: GrayWord) -> 'StrategyVector':
        return cls(mode, strategy_for(mode).entries_from_digits(word.digits))

    def format(self) -> str:
        if self.mode.is_sign_mode:
            return " ".join(f"{a:+d}" for a in self.entries)
        return " ".join(str(a) for a in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class RunningState:
    """Running vectors of the strategy at word j (j is None off the Gray path)."""
    mode: SolveMode
    m_vectors: np.ndarray
    group_norms: np.ndarray
    current_value: int
    strategy: StrategyVector
    j: Optional[int] = None

    def copy(self) -> 'RunningState':
        """Create a deep copy of the state."""
        return replace(self, m_vectors=self.m_vectors.copy(), group_norms=self.group_norms.copy())

    def same_as(self, other: 'RunningState') -> bool:
        return (self.current_value == other.current_value
                and self.strategy == other.strategy
                and np.array_equal(self.m_vectors, other.m_vectors)
                and np.array_equal(self.group_norms, other.group_norms))


@dataclass(frozen=True)
class RangeMaximum:
    """Best value of one work range; value is -inf for an empty range."""
    value: Union[int, float]
    word: int
    strategy: Optional[StrategyVector]

    @property
    def is_empty(self) -> bool:
        return self.strategy is None


@dataclass
class NormResult:
    """Container for one norm computation."""
    mode: SolveMode
    d: int
    value: int
    argmax_word: int
    strategy: StrategyVector
    report: PreprocessReport
    workers: int = 1

    def same_optimum(self, other: 'NormResult') -> bool:
        return (self.value == other.value and self.argmax_word == other.argmax_word
                and self.strategy.entries == other.strategy.entries)


def free_digits(matrix: IntMatrix) -> int:
    return max(matrix.rows - 1, 0)


def value_from_scratch(matrix: IntMatrix, mode: SolveMode,
                       strategy: Union[StrategyVector, Sequence[int]],
                       j: Optional[int] = None) -> RunningState:
    """Full vector-matrix accumulation for one strategy."""
    entries = strategy.entries if isinstance(strategy, StrategyVector) else tuple(int(a) for a in strategy)
    norm_strategy = strategy_for(mode)
    if matrix.cols == 0 and matrix.rows > 0:
        raise DimensionMismatchError("cannot evaluate a matrix without columns")
    norm_strategy.validate(entries, matrix.rows)
    vectors, contributions, value = norm_strategy.accumulate(
        matrix.entries, np.array(entries, dtype=np.int64))
    return RunningState(mode=mode, m_vectors=vectors, group_norms=contributions,
                        current_value=value, strategy=StrategyVector(mode, entries), j=j)


def state_at_word(matrix: IntMatrix, mode: SolveMode, j: int) -> RunningState:
    """From-scratch state for Gray word j."""
    word = word_at(mode.d, free_digits(matrix), j)
    return value_from_scratch(matrix, mode, StrategyVector.from_word(mode, word), j=j)


def step(matrix: IntMatrix, state: RunningState, j: int) -> RunningState:
    """
    Move the state to neighbouring word j (j = state.j ± 1) by one row update.

    The changed digit i is the change index of the larger of the two words;
    matrix row i + 1 moves from its old sign/label to the new one.
    """
    if state.j is None or abs(j - state.j) != 1:
        raise NonConsecutiveStepError(f"cannot step from word {state.j} to word {j}")
    h = free_digits(matrix)
    if not 0 <= j < state.mode.d ** h:
        raise NonConsecutiveStepError(f"word {j} outside [0, {state.mode.d ** h})")
    d = state.mode.d
    i = int(dary_change_index(d, max(j, state.j)))
    old_digit = int(dary_digit(d, i, state.j))
    new_digit = int(dary_digit(d, i, j))

    norm_strategy = strategy_for(state.mode)
    moved = state.copy()
    value = norm_strategy.advance(matrix.entries, moved.m_vectors, moved.group_norms,
                                  state.current_value, i + 1, old_digit, new_digit)
    entries = list(state.strategy.entries)
    entries[i + 1] = norm_strategy.entry_from_digit(new_digit)
    moved.current_value = value
    moved.strategy = StrategyVector(state.mode, tuple(entries))
    moved.j = j
    return moved


def scan_range(matrix: IntMatrix, mode: SolveMode, work_range: 'WorkRange',
               powers: Optional[np.ndarray] = None) -> RangeMaximum:
    """
    Maximum over one inclusive word range, smallest word index on ties.

    Starts from a from-scratch evaluation at j_min and steps to j_max inside
    the compiled kernel of the mode.
    """
    if work_range.j_max < work_range.j_min:
        return RangeMaximum(EMPTY_RANGE_VALUE, work_range.j_min, None)
    if matrix.is_empty:
        return RangeMaximum(0, 0, StrategyVector(mode, (strategy_for(mode).fixed_entry,) * matrix.rows))
    h = free_digits(matrix)
    if powers is None:
        powers = power_table(mode.d, h)
    value, word = strategy_for(mode).scan(matrix.entries, powers, work_range.j_min, work_range.j_max)
    strategy = StrategyVector.from_word(mode, word_at(mode.d, h, word))
    return RangeMaximum(value, word, strategy)


def empty_result(matrix: IntMatrix, mode: SolveMode, report: PreprocessReport) -> NormResult:
    """Norm of a matrix reduced to nothing: 0 with an empty strategy."""
    return NormResult(mode=mode, d=mode.d, value=0, argmax_word=0,
                      strategy=StrategyVector(mode, ()), report=report)
