"""
Equal-share partitioning of the Gray word range across workers and the solve pipeline.

Workers are threads; the compiled range scans release the GIL. Each worker owns
its running state, the matrix is shared read-only, and the per-worker maxima
are folded sequentially after the join, so the result does not depend on the
worker count.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from ..core.constants import SolveMode
from ..core.graycode import power_table
from ..core.matrix import IntMatrix, PreprocessReport, check_feasible, identity_report, preprocess
from ..utils.environment import default_worker_count
from .solver import NormResult, RangeMaximum, empty_result, free_digits, scan_range

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkRange:
    """Inclusive word interval [j_min, j_max] of one worker; empty when j_max < j_min."""
    j_min: int
    j_max: int
    worker_id: int = 0

    @property
    def size(self) -> int:
        return max(self.j_max - self.j_min + 1, 0)

    @property
    def is_empty(self) -> bool:
        return self.j_max < self.j_min


def partition(total_words: int, workers: int, worker_id: int) -> WorkRange:
    """
    Word interval of worker t out of T for C words.

    J = floor(C / T) words each, the R = C mod T leftover words go one apiece to
    the first R workers.
    """
    if total_words < 1 or workers < 1 or not 0 <= worker_id < workers:
        raise ValueError(f"invalid partition request C={total_words}, T={workers}, t={worker_id}")
    share = total_words // workers
    remainder = total_words % workers

    j_min = worker_id * share
    j_max = (worker_id + 1) * share - 1
    if worker_id <= remainder:
        j_min += worker_id
    else:
        j_min += remainder
    if worker_id < remainder:
        j_max += worker_id + 1
    else:
        j_max += remainder
    return WorkRange(j_min, j_max, worker_id)


def partition_all(total_words: int, workers: int) -> List[WorkRange]:
    return [partition(total_words, workers, t) for t in range(workers)]


def reduce_maxima(maxima: List[RangeMaximum]) -> Optional[RangeMaximum]:
    """Largest value, smaller word index on ties; empty ranges are skipped."""
    best: Optional[RangeMaximum] = None
    for candidate in maxima:
        if candidate.is_empty:
            continue
        if (best is None or candidate.value > best.value
                or (candidate.value == best.value and candidate.word < best.word)):
            best = candidate
    return best


def solve(matrix: IntMatrix, mode: SolveMode, workers: Optional[int] = None,
          report: Optional[PreprocessReport] = None) -> NormResult:
    """
    Scan all d^(n-1) words of the (already preprocessed) matrix with T workers.

    `mode` is the mode the matrix is solved in (the report's effective mode
    after a marginal downgrade).
    """
    report = report or identity_report(matrix, mode)
    if matrix.is_empty:
        return empty_result(matrix, mode, report)
    workers = workers or default_worker_count(mode.d)
    h = free_digits(matrix)
    total_words = mode.d ** h
    powers = power_table(mode.d, h)
    ranges = partition_all(total_words, workers)
    _logger.info("solving %s on %dx%d: %d words over %d workers",
                 mode.label, matrix.rows, matrix.cols, total_words, workers)

    if workers == 1:
        maxima = [scan_range(matrix, mode, ranges[0], powers)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            maxima = list(pool.map(lambda work: scan_range(matrix, mode, work, powers),
                                   [work for work in ranges if not work.is_empty]))

    best = reduce_maxima(maxima)
    return NormResult(mode=mode, d=mode.d, value=int(best.value), argmax_word=best.word,
                      strategy=best.strategy, report=report, workers=workers)


def compute_norm(matrix: IntMatrix, mode: SolveMode, workers: Optional[int] = None,
                 use_preprocessing: bool = True) -> NormResult:
    """
    Full pipeline: feasibility check, preprocessing, parallel scan.

    The result's mode is the requested one; its strategy refers to the rows of
    the solved matrix (see result.report).
    """
    if use_preprocessing:
        solved, report = preprocess(matrix, mode)
    else:
        solved, report = matrix, identity_report(matrix, mode)
    check_feasible(solved, report.effective_mode, transpose=False)

    start = time.perf_counter()
    result = solve(solved, report.effective_mode, workers, report)
    elapsed = time.perf_counter() - start
    _logger.info("%s = %d (word %d) in %.3f s", mode.label, result.value, result.argmax_word, elapsed)
    result.mode = mode
    return result
