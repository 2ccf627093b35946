"""
lnorms: exact brute-force L1, Lmarg and L_d norms of integer matrices.

Strategies are enumerated along reflected Gray codes, so each step updates the
running vectors with one matrix row. The word range is split across worker
threads and folded deterministically.

Quick Start:
-----------
>>> from lnorms import IntMatrix, SolveMode, compute_norm
>>> matrix = IntMatrix.from_rows([[4, -7, -2], [-5, 2, 3], [9, -1, 4]])
>>> result = compute_norm(matrix, SolveMode.l1())
>>> result.value, result.argmax_word
(29, 3)

Cross-checking against the naive enumerator:
-------------------------------------------
>>> from lnorms.analysis import oracle_solve
>>> oracle_solve(matrix, SolveMode.l1()).value
29
"""

__version__ = "1.0.0"

# Initialize environment FIRST
from .utils.environment import initialize_environment
initialize_environment()

from .core.constants import ModeTag, RunConfig, SolveMode
from .core.errors import FeasibilityError, LNormError, MatrixParseError, SearchError
from .core.matrix import IntMatrix, PreprocessReport, check_feasible, parse_matrix, preprocess
from .search.scheduler import compute_norm, solve
from .search.solver import NormResult, StrategyVector

__all__ = [
    'ModeTag',
    'RunConfig',
    'SolveMode',
    'LNormError',
    'MatrixParseError',
    'FeasibilityError',
    'SearchError',
    'IntMatrix',
    'PreprocessReport',
    'parse_matrix',
    'check_feasible',
    'preprocess',
    'compute_norm',
    'solve',
    'NormResult',
    'StrategyVector',
]
