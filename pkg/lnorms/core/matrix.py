"""
Exact-integer matrices, input parsing, feasibility checks and norm-preserving reductions.

Entries are stored as int64 arrays for the search kernels; every reduction is done
on Python integers so cross-multiplications cannot overflow.
"""

import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from math import gcd
from typing import IO, List, Optional, Sequence, Tuple, Union

import numpy as np

from .constants import ModeTag, SolveMode, WordConstants
from .errors import (
    AbsSumOverflowError,
    EmptyMatrixError,
    EntryOutOfRangeError,
    NonIntegerTokenError,
    RaggedRowsError,
    TooManyRowsError,
)

_logger = logging.getLogger(__name__)

_INTEGER_TOKEN = re.compile(r"[+-]?[0-9]+\Z")

Rows = List[List[int]]


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """
    Dense n×m matrix of exact integers.

    Parsed matrices always have n, m >= 1; reductions may produce an empty
    matrix (a zero matrix reduces to 0×0), whose norm is 0 by convention.
    """
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.int64, copy=True, order="C")
        if entries.ndim != 2:
            raise ValueError(f"IntMatrix needs a 2-D array, got shape {entries.shape}")
        total = _exact_abs_sum(entries)
        if total >= WordConstants.ABS_SUM_LIMIT:
            raise AbsSumOverflowError(
                f"total absolute sum {total} must stay below 2^62 to keep accumulators exact"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'IntMatrix':
        """Build from nested integer rows; `cols` fixes the width of a row-less matrix."""
        if len(rows) == 0:
            return cls(np.zeros((0, cols or 0), dtype=np.int64))
        width = len(rows[0]) if cols is None else cols
        return cls(np.array([list(row) for row in rows], dtype=np.int64).reshape(len(rows), width))

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def to_lists(self) -> Rows:
        """Entries as Python integers."""
        return [[int(v) for v in row] for row in self.entries.tolist()]

    def abs_sum(self) -> int:
        """Σ|M_xy| computed exactly."""
        return _exact_abs_sum(self.entries)

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(self.entries.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.entries, other.entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"

    def format_text(self) -> str:
        """Render in the input format (one whitespace-separated row per line)."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.to_lists())


def parse_matrix(source: Union[bytes, str, IO]) -> IntMatrix:
    """
    Parse whitespace-separated decimal integers, one matrix row per line.

    Blank lines and lines starting with '#' are ignored. Accepts bytes, str or
    a (binary or text) stream.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        try:
            source = bytes(source).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise NonIntegerTokenError(f"input is not valid text: {exc}") from exc

    rows: Rows = []
    width: Optional[int] = None
    for line_number, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = [_parse_entry(token, line_number) for token in stripped.split()]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise RaggedRowsError(f"expected {width} entries, found {len(row)}", line_number)
        rows.append(row)

    if not rows:
        raise EmptyMatrixError("no data lines found")

    return IntMatrix.from_rows(rows)


def _exact_abs_sum(entries: np.ndarray) -> int:
    # Python integers: abs(INT64_MIN) wraps in int64
    return sum(abs(v) for v in entries.ravel().tolist())


def _parse_entry(token: str, line_number: int) -> int:
    if not _INTEGER_TOKEN.match(token):
        raise NonIntegerTokenError(f"not a decimal integer: {token!r}", line_number)
    value = int(token)
    if not WordConstants.INT64_MIN <= value <= WordConstants.INT64_MAX:
        raise EntryOutOfRangeError(f"entry {token} outside the signed 64-bit range", line_number)
    return value


# ---------------------------------------------------------------------------
# Feasibility
# ---------------------------------------------------------------------------

def max_free_digits(d: int) -> int:
    """Largest h with d^h representable in GRAY_BITS bits."""
    limit = 1 << WordConstants.GRAY_BITS
    free = 0
    while d ** (free + 1) <= limit:
        free += 1
    return free


def max_rows_for(d: int) -> int:
    """Row limit: one strategy entry is fixed, the rest are Gray digits."""
    return max_free_digits(d) + 1


def check_feasible(matrix: IntMatrix, mode: SolveMode,
                   word_bits: int = WordConstants.WORD_BITS,
                   transpose: bool = True) -> None:
    """
    Raise TooManyRowsError unless the word count d^(free digits) fits the word.

    In L1 mode with transposition enabled the enumerated dimension is
    min(rows, cols).
    """
    if word_bits != WordConstants.WORD_BITS:
        raise ValueError(f"word indices are {WordConstants.WORD_BITS}-bit, got {word_bits}")
    enumerated = matrix.rows
    if mode.tag is ModeTag.L1 and transpose:
        enumerated = min(matrix.rows, matrix.cols)
    free = max(enumerated - 1, 0)
    if mode.d ** free > 1 << WordConstants.GRAY_BITS:
        max_rows = max_rows_for(mode.d)
        detail = " (rows and columns both exceed it)" if mode.tag is ModeTag.L1 and transpose else ""
        raise TooManyRowsError(
            f"{mode.label}: {enumerated} enumerated rows need {free} free base-{mode.d} digits; "
            f"at most {max_rows} rows fit {word_bits}-bit word indices{detail}",
            max_rows=max_rows,
        )


# ---------------------------------------------------------------------------
# Reduction steps
# ---------------------------------------------------------------------------

class ReductionStep(ABC):
    """One recorded reduction; indices refer to the matrix when the step was applied."""

    @abstractmethod
    def apply(self, rows: Rows, cols: int) -> Tuple[Rows, int]:
        """Replay the step on a row list of the given width."""

    @abstractmethod
    def describe(self) -> str:
        pass


@dataclass(frozen=True)
class RemovedZeroRow(ReductionStep):
    index: int

    def apply(self, rows, cols):
        return rows[:self.index] + rows[self.index + 1:], cols

    def describe(self):
        return f"removed zero row {self.index}"


@dataclass(frozen=True)
class RemovedZeroCol(ReductionStep):
    index: int

    def apply(self, rows, cols):
        return [row[:self.index] + row[self.index + 1:] for row in rows], cols - 1

    def describe(self):
        return f"removed zero column {self.index}"


@dataclass(frozen=True)
class MergedRows(ReductionStep):
    """Row `drop` equals factor × row `keep`; keep becomes (1+|factor|) × keep."""
    keep: int
    drop: int
    factor: Tuple[int, int]

    def apply(self, rows, cols):
        sign = 1 if self.factor[0] > 0 else -1
        merged = [a + sign * b for a, b in zip(rows[self.keep], rows[self.drop])]
        rows = list(rows)
        rows[self.keep] = merged
        del rows[self.drop]
        return rows, cols

    def describe(self):
        return f"merged row {self.drop} into row {self.keep} (factor {_format_factor(self.factor)})"


@dataclass(frozen=True)
class MergedCols(ReductionStep):
    """Column `drop` equals factor × column `keep`."""
    keep: int
    drop: int
    factor: Tuple[int, int]

    def apply(self, rows, cols):
        sign = 1 if self.factor[0] > 0 else -1
        out = []
        for row in rows:
            row = list(row)
            row[self.keep] = row[self.keep] + sign * row[self.drop]
            del row[self.drop]
            out.append(row)
        return out, cols - 1

    def describe(self):
        return f"merged column {self.drop} into column {self.keep} (factor {_format_factor(self.factor)})"


@dataclass(frozen=True)
class MergedSignUniformCols(ReductionStep):
    """Two sign-uniform columns replaced by the entry-wise sum of absolute values."""
    keep: int
    drop: int

    def apply(self, rows, cols):
        out = []
        for row in rows:
            row = list(row)
            row[self.keep] = abs(row[self.keep]) + abs(row[self.drop])
            del row[self.drop]
            out.append(row)
        return out, cols - 1

    def describe(self):
        return f"merged sign-uniform column {self.drop} into column {self.keep}"


@dataclass(frozen=True)
class Transposed(ReductionStep):

    def apply(self, rows, cols):
        return [list(column) for column in zip(*rows)] if rows else [], len(rows)

    def describe(self):
        return "transposed"


def _format_factor(factor: Tuple[int, int]) -> str:
    num, den = factor
    return str(num) if den == 1 else f"{num}/{den}"


@dataclass
class PreprocessReport:
    """Ordered log linking the solved matrix to the input."""
    original_shape: Tuple[int, int]
    final_shape: Tuple[int, int] = (0, 0)
    mode: Optional[SolveMode] = None
    effective_mode: Optional[SolveMode] = None
    steps: List[ReductionStep] = field(default_factory=list)

    @property
    def mode_downgraded(self) -> bool:
        """True when MARG was reduced to an L1 problem (first row and column all zero)."""
        return (self.mode is not None and self.effective_mode is not None
                and self.mode.tag is ModeTag.MARG and self.effective_mode.tag is ModeTag.L1)

    @property
    def transposed(self) -> bool:
        return any(isinstance(step, Transposed) for step in self.steps)

    def summary(self) -> str:
        (n0, m0), (n1, m1) = self.original_shape, self.final_shape
        text = f"{n0}×{m0} → {n1}×{m1} ({len(self.steps)} steps)"
        if self.mode_downgraded:
            text += ", marginal-free: solved as L1"
        return text

    def replay(self, original: IntMatrix) -> IntMatrix:
        """Apply the recorded steps to the original matrix."""
        rows, cols = original.to_lists(), original.cols
        for step in self.steps:
            rows, cols = step.apply(rows, cols)
        return IntMatrix.from_rows(rows, cols)


def identity_report(matrix: IntMatrix, mode: SolveMode) -> PreprocessReport:
    """Report for a matrix solved without preprocessing."""
    return PreprocessReport(original_shape=matrix.shape, final_shape=matrix.shape,
                            mode=mode, effective_mode=mode)


# ---------------------------------------------------------------------------
# Preprocessing
# ---------------------------------------------------------------------------

class _Reducer:
    """Mutable working copy driven to a fixpoint by preprocess()."""

    def __init__(self, matrix: IntMatrix, mode: SolveMode):
        self.rows = matrix.to_lists()
        self.cols = matrix.cols
        self.mode = mode
        self.steps: List[ReductionStep] = []

    def record(self, step: ReductionStep) -> None:
        self.rows, self.cols = step.apply(self.rows, self.cols)
        self.steps.append(step)
        _logger.debug("preprocess %s: %s -> %dx%d", self.mode.label, step.describe(),
                      len(self.rows), self.cols)

    @property
    def marginal(self) -> bool:
        return self.mode.tag is ModeTag.MARG

    def column(self, y: int) -> List[int]:
        return [row[y] for row in self.rows]

    # rule 1 -----------------------------------------------------------------
    def remove_zero_lines(self) -> bool:
        changed = False
        protected = 1 if self.marginal else 0
        for x in reversed(range(protected, len(self.rows))):
            if not any(self.rows[x]):
                self.record(RemovedZeroRow(x))
                changed = True
        for y in reversed(range(protected, self.cols)):
            if not any(self.column(y)):
                self.record(RemovedZeroCol(y))
                changed = True
        if self.marginal and self.rows and self.cols and not any(self.rows[0]) \
                and not any(self.column(0)):
            self.record(RemovedZeroRow(0))
            self.record(RemovedZeroCol(0))
            self.mode = SolveMode.l1()
            changed = True
        return changed

    # rule 2 -----------------------------------------------------------------
    def merge_proportional_rows(self) -> bool:
        first = 1 if self.marginal else 0
        for keep in range(first, len(self.rows)):
            for drop in range(keep + 1, len(self.rows)):
                factor = proportionality_factor(self.rows[keep], self.rows[drop])
                if factor is None:
                    continue
                if self.mode.tag is ModeTag.LD and factor[0] < 0:
                    continue
                self.record(MergedRows(keep, drop, factor))
                return True
        return False

    def merge_proportional_cols(self) -> bool:
        first = 1 if self.marginal else 0
        for keep in range(first, self.cols):
            reference = self.column(keep)
            for drop in range(keep + 1, self.cols):
                factor = proportionality_factor(reference, self.column(drop))
                if factor is not None:
                    self.record(MergedCols(keep, drop, factor))
                    return True
        return False

    # rule 3 -----------------------------------------------------------------
    def merge_sign_uniform_cols(self) -> bool:
        uniform = [y for y in range(self.cols) if is_sign_uniform(self.column(y))]
        if len(uniform) < 2:
            return False
        self.record(MergedSignUniformCols(uniform[0], uniform[1]))
        return True

    def run(self) -> None:
        changed = True
        while changed:
            changed = self.remove_zero_lines()
            while self.merge_proportional_rows():
                changed = True
            while self.merge_proportional_cols():
                changed = True
            if self.mode.tag is ModeTag.LD:
                while self.merge_sign_uniform_cols():
                    changed = True
        if self.mode.tag is ModeTag.L1 and len(self.rows) > self.cols:
            self.record(Transposed())


def proportionality_factor(reference: Sequence[int], other: Sequence[int]) -> Optional[Tuple[int, int]]:
    """
    Reduced (num, den) with other = num/den × reference, or None.

    Uses integer cross-multiplication; zero lines are never proportional.
    """
    pivot = next((y for y, v in enumerate(reference) if v != 0), None)
    if pivot is None or other[pivot] == 0:
        return None
    r0, o0 = reference[pivot], other[pivot]
    if any(o * r0 != r * o0 for r, o in zip(reference, other)):
        return None
    common = gcd(o0, r0)
    num, den = o0 // common, r0 // common
    if den < 0:
        num, den = -num, -den
    return num, den


def is_sign_uniform(line: Sequence[int]) -> bool:
    """All entries >= 0 or all entries <= 0 (and not all zero)."""
    return any(line) and (all(v >= 0 for v in line) or all(v <= 0 for v in line))


def preprocess(matrix: IntMatrix, mode: SolveMode) -> Tuple[IntMatrix, PreprocessReport]:
    """
    Reduce the matrix without changing its norm under `mode`.

    Per pass: remove zero lines, merge proportional lines, merge sign-uniform
    columns (LD only); repeat until nothing changes, then transpose in L1 mode
    if rows > cols. A MARG matrix whose first row and column are both zero loses
    them and continues as an L1 problem (report.effective_mode).
    """
    reducer = _Reducer(matrix, mode)
    reducer.run()
    reduced = IntMatrix.from_rows(reducer.rows, reducer.cols)
    report = PreprocessReport(
        original_shape=matrix.shape,
        final_shape=reduced.shape,
        mode=mode,
        effective_mode=reducer.mode,
        steps=reducer.steps,
    )
    if report.steps:
        _logger.info("preprocess %s: %s", mode.label, report.summary())
    return reduced, report
