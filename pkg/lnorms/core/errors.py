"""Exception hierarchy for lnorms."""

from typing import Optional


class LNormError(Exception):
    """Root of all errors raised by lnorms."""


class MatrixParseError(LNormError, ValueError):
    """Input text does not describe a valid integer matrix."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RaggedRowsError(MatrixParseError):
    """Rows have unequal token counts."""


class NonIntegerTokenError(MatrixParseError):
    """A token is not a decimal integer."""


class EmptyMatrixError(MatrixParseError):
    """No data line was found."""


class EntryOutOfRangeError(MatrixParseError):
    """An entry does not fit a signed 64-bit integer."""


class AbsSumOverflowError(MatrixParseError):
    """Σ|M_xy| reaches the accumulator headroom limit."""


class FeasibilityError(LNormError, ValueError):
    """The matrix is too large for the requested enumeration."""


class TooManyRowsError(FeasibilityError):
    """The Gray-code word index would not fit the machine word."""

    def __init__(self, message: str, max_rows: int):
        self.max_rows = max_rows
        super().__init__(message)


class TooLargeForOracleError(FeasibilityError):
    """The naive enumerator would exceed its desk-scale guard."""


class SearchError(LNormError, RuntimeError):
    """Inconsistent use of the iterative search state."""


class DimensionMismatchError(SearchError):
    """A strategy vector does not match the matrix."""


class NonConsecutiveStepError(SearchError):
    """A step was requested between words that are not neighbours."""


class GrayCodeError(LNormError, ValueError):
    """Invalid Gray-code query."""


class IndexOutOfRangeError(GrayCodeError):
    """Word index outside [0, d^h)."""


class SizeTooLargeError(GrayCodeError):
    """The requested code is too large to materialise."""
