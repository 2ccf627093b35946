"""
Naive vs iterative scaling comparison tools.

This module times the from-scratch oracle (n²·2^n work for n×n L1) against the
Gray-code scan (n·2^n) on identical random matrices, one worker each, keeping
the minimum over repeated trials.
"""

import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..core.constants import BenchConstants, SolveMode
from ..core.matrix import IntMatrix
from ..search.scheduler import solve
from ..utils.environment import describe_cpu
from .oracle import oracle_solve

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRow:
    """Minimum wall-clock seconds of each arm for one matrix size."""
    n: int
    t_naive: float
    t_iterative: float

    @property
    def ratio(self) -> float:
        return self.t_naive / self.t_iterative if self.t_iterative > 0 else float('inf')

    def as_record(self) -> Dict:
        return {'n': self.n, 't_naive': self.t_naive, 't_iterative': self.t_iterative,
                'ratio': self.ratio}


def random_matrix(n: int, rng: np.random.Generator) -> IntMatrix:
    """n×n matrix with entries uniform in [ENTRY_LOW, ENTRY_HIGH]."""
    return IntMatrix(rng.integers(BenchConstants.ENTRY_LOW, BenchConstants.ENTRY_HIGH + 1,
                                  size=(n, n), dtype=np.int64))


def _warm_up() -> None:
    """Compile both kernels outside the timed region."""
    sample = IntMatrix.from_rows([[1, -2, 3], [4, 5, -6], [-7, 8, 9]])
    oracle_solve(sample, SolveMode.l1())
    solve(sample, SolveMode.l1(), workers=1)


def bench_pair(n: int, trials: int = BenchConstants.DEFAULT_TRIALS,
               seed: int = BenchConstants.DEFAULT_SEED) -> BenchRow:
    """
    Time oracle_solve against solve(T=1) on one seeded random n×n matrix.

    Both arms must agree on every trial; the minimum time per arm is kept.
    """
    if not BenchConstants.MIN_N <= n <= BenchConstants.MAX_N:
        raise ValueError(f"bench size must lie in [{BenchConstants.MIN_N}, {BenchConstants.MAX_N}], got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    _warm_up()
    mode = SolveMode.l1()
    matrix = random_matrix(n, np.random.default_rng([seed, n]))

    naive_times, iterative_times = [], []
    for _ in range(trials):
        start = time.perf_counter()
        naive = oracle_solve(matrix, mode)
        naive_times.append(time.perf_counter() - start)

        start = time.perf_counter()
        iterative = solve(matrix, mode, workers=1)
        iterative_times.append(time.perf_counter() - start)

        if (naive.value, naive.argmax_word) != (iterative.value, iterative.argmax_word):
            raise RuntimeError(
                f"n={n}: oracle ({naive.value}, word {naive.argmax_word}) and iterative "
                f"({iterative.value}, word {iterative.argmax_word}) disagree"
            )

    row = BenchRow(n=n, t_naive=min(naive_times), t_iterative=min(iterative_times))
    _logger.info("bench n=%d: naive %.4f s, iterative %.4f s, ratio %.2f",
                 n, row.t_naive, row.t_iterative, row.ratio)
    return row


class ScalingMetrics:
    """Quantities checked against the n²·2^n versus n·2^n model."""

    @staticmethod
    def ratios_increasing(rows: Sequence[BenchRow]) -> bool:
        """Naive/iterative ratio grows strictly with n."""
        ratios = [row.ratio for row in rows]
        return all(a < b for a, b in zip(ratios, ratios[1:]))

    @staticmethod
    def growth_factors(rows: Sequence[BenchRow]) -> List[float]:
        """Iterative runtime ratio between consecutive sizes."""
        return [b.t_iterative / a.t_iterative for a, b in zip(rows, rows[1:])]

    @staticmethod
    def model_growth(n_from: int, n_to: int) -> float:
        """Prediction of B·n·2^n between two sizes."""
        return (n_to * 2 ** n_to) / (n_from * 2 ** n_from)


class ScalingStudy:
    """
    High-level interface for the naive-versus-iterative benchmark.

    This is the class the bench subcommand drives.
    """

    def __init__(self, sizes: Sequence[int] = BenchConstants.DEFAULT_SIZES,
                 trials: int = BenchConstants.DEFAULT_TRIALS,
                 seed: int = BenchConstants.DEFAULT_SEED):
        self.sizes = list(sizes)
        self.trials = trials
        self.seed = seed
        self.cpu = describe_cpu()
        self.rows: List[BenchRow] = []

    def run(self) -> List[BenchRow]:
        self.rows = [bench_pair(n, self.trials, self.seed) for n in self.sizes]
        return self.rows

    def _require_rows(self) -> None:
        if not self.rows:
            raise RuntimeError("Must run the study before reporting")

    def format_table(self) -> str:
        """Plain-text table with the model prediction for each size step."""
        self._require_rows()
        lines = [
            f"# CPU: {self.cpu}",
            f"# trials per size: {self.trials} (minimum kept), seed: {self.seed}",
            f"{'n':>4} {'t_naive[s]':>12} {'t_iter[s]':>12} {'ratio':>8} {'growth':>8} {'model':>8}",
        ]
        previous: Optional[BenchRow] = None
        for row in self.rows:
            growth = model = ""
            if previous is not None:
                growth = f"{row.t_iterative / previous.t_iterative:8.2f}"
                model = f"{ScalingMetrics.model_growth(previous.n, row.n):8.2f}"
            lines.append(f"{row.n:>4} {row.t_naive:12.5f} {row.t_iterative:12.5f} "
                         f"{row.ratio:8.2f} {growth:>8} {model:>8}")
            previous = row
        return "\n".join(lines)

    def generate_report(self, output_dir: str = "scaling_results") -> Path:
        """
        Write scaling.csv and scaling_summary.txt.

        Creates the directory if needed and returns its path.
        """
        self._require_rows()
        output_path = Path(output_dir)
        output_path.mkdir(parents=True, exist_ok=True)

        np.savetxt(
            output_path / "scaling.csv",
            np.array([[row.n, row.t_naive, row.t_iterative, row.ratio] for row in self.rows]),
            header="n, t_naive(s), t_iterative(s), ratio",
            delimiter=",",
            fmt=["%d", "%.6e", "%.6e", "%.4f"],
        )
        with open(output_path / "scaling_summary.txt", 'w') as f:
            f.write(self.format_table() + "\n")
            f.write(f"ratio increasing in n: {ScalingMetrics.ratios_increasing(self.rows)}\n")

        _logger.info("scaling report written to %s", output_path)
        return output_path
