"""
Command-line front door: compute a norm, verify against the oracle, run the scaling benchmark.

Usage:
    lnorms compute MATRIX [--mode l1|marg|ld] [--d N] [--threads N] [--no-preprocess] [--format text|jsonl]
    lnorms verify MATRIX [--mode ...] [--d N] [--threads N] [--no-preprocess] [--format ...]
    lnorms bench [--min-n N] [--max-n N] [--trials N] [--seed N] [--format ...] [--output-dir DIR]

MATRIX is a text file of whitespace-separated integers, one row per line,
'#' comments allowed; '-' reads standard input.

Exit codes: 0 success, 1 verify mismatch, 2 parse error, 3 feasibility error.
"""

import argparse
import json
import logging
import sys
import time
from typing import Dict, List, Optional, Tuple

from .core.constants import BenchConstants, ExitCodes, RunConfig, WordConstants
from .core.errors import FeasibilityError, MatrixParseError
from .core.matrix import IntMatrix, max_rows_for, parse_matrix
from .analysis.comparison import ScalingMetrics, ScalingStudy
from .analysis.oracle import oracle_solve
from .search.scheduler import compute_norm
from .search.solver import NormResult

_logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lnorms",
        description="Exact brute-force L1, Lmarg and L_d norms of integer matrices.",
        epilog=(f"Word indices are {WordConstants.WORD_BITS}-bit: at most {max_rows_for(2)} enumerated "
                f"rows for l1/marg, {max_rows_for(3)} for ld with d=3. "
                "Exit codes: 0 ok, 1 verify mismatch, 2 parse error, 3 feasibility error."),
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress (-v info, -vv debug)")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_text in (("compute", "compute one norm"),
                            ("verify", "compare the Gray-code search with the naive oracle")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("input_path", metavar="MATRIX", help="matrix file, '-' for stdin")
        sub.add_argument("--mode", choices=["l1", "marg", "ld"], default="l1",
                         help="norm to compute (default: l1)")
        sub.add_argument("--d", type=int, default=None, help="message alphabet size, required with --mode ld")
        sub.add_argument("--threads", type=int, default=None, dest="workers",
                         help="worker threads (default: available CPUs rounded down to a power of d)")
        sub.add_argument("--no-preprocess", action="store_false", dest="preprocess",
                         help="solve the matrix as given (no reductions, no transposition)")
        sub.add_argument("--format", choices=["text", "jsonl"], default="text", dest="output_format")

    bench = subparsers.add_parser("bench", help="naive vs iterative scaling benchmark (L1, n×n, one worker)")
    bench.add_argument("--min-n", type=int, default=BenchConstants.DEFAULT_SIZES[0])
    bench.add_argument("--max-n", type=int, default=BenchConstants.DEFAULT_SIZES[-1])
    bench.add_argument("--trials", type=int, default=BenchConstants.DEFAULT_TRIALS,
                       help="repetitions per size, minimum time kept (default: %(default)s)")
    bench.add_argument("--seed", type=int, default=BenchConstants.DEFAULT_SEED)
    bench.add_argument("--format", choices=["text", "jsonl"], default="text", dest="output_format")
    bench.add_argument("--output-dir", default=None, help="also write scaling.csv and a summary here")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {key: value for key, value in vars(args).items() if key != "verbose"}
    return RunConfig(**fields)


def read_matrix(path: str) -> IntMatrix:
    if path == "-":
        return parse_matrix(sys.stdin.buffer)
    with open(path, "rb") as handle:
        return parse_matrix(handle)


def result_record(result: NormResult, elapsed_ms: float) -> Dict:
    """json-lines schema of one result."""
    return {
        "mode": result.mode.tag.value,
        "d": result.d,
        "value": result.value,
        "argmax_word": result.argmax_word,
        "strategy": list(result.strategy.entries),
        "shape_before": list(result.report.original_shape),
        "shape_after": list(result.report.final_shape),
        "threads": result.workers,
        "elapsed_ms": elapsed_ms,
    }


def format_result(result: NormResult, elapsed_ms: float, title: Optional[str] = None) -> str:
    report = result.report
    lines = []
    if title:
        lines.append(f"[{title}]")
    lines += [
        f"mode: {result.mode.tag.value} (d={result.d})",
        f"preprocessing: {report.summary()}",
    ]
    lines += [f"  {step.describe()}" for step in report.steps]
    lines += [
        f"{result.mode.label} = {result.value}",
        f"argmax word: {result.argmax_word}",
        f"strategy: {result.strategy.format()}",
        f"threads: {result.workers}",
        f"elapsed: {elapsed_ms:.3f} ms",
    ]
    return "\n".join(lines)


def emit(cfg: RunConfig, text: str, records: List[Dict]) -> None:
    if cfg.output_format == "jsonl":
        for record in records:
            print(json.dumps(record))
    else:
        print(text)


def _timed_compute(matrix: IntMatrix, cfg: RunConfig) -> Tuple[NormResult, float]:
    start = time.perf_counter()
    result = compute_norm(matrix, cfg.solve_mode(), cfg.workers, cfg.preprocess)
    return result, (time.perf_counter() - start) * 1000.0


def run_compute(cfg: RunConfig) -> int:
    """Compute one norm and print the report."""
    matrix = read_matrix(cfg.input_path)
    result, elapsed_ms = _timed_compute(matrix, cfg)
    emit(cfg, format_result(result, elapsed_ms), [result_record(result, elapsed_ms)])
    return ExitCodes.OK


def run_verify(cfg: RunConfig) -> int:
    """
    Run both engines on the unreduced matrix; values and argmax words must match.

    With preprocessing on, the reduced solve must also reproduce the oracle value.
    """
    matrix = read_matrix(cfg.input_path)
    mode = cfg.solve_mode()

    start = time.perf_counter()
    reference = oracle_solve(matrix, mode)
    oracle_ms = (time.perf_counter() - start) * 1000.0

    start = time.perf_counter()
    iterative = compute_norm(matrix, mode, cfg.workers, use_preprocessing=False)
    iterative_ms = (time.perf_counter() - start) * 1000.0

    results = [("oracle", reference, oracle_ms), ("iterative", iterative, iterative_ms)]
    agree = (reference.value, reference.argmax_word) == (iterative.value, iterative.argmax_word)
    if cfg.preprocess:
        reduced, reduced_ms = _timed_compute(matrix, cfg)
        results.append(("preprocessed", reduced, reduced_ms))
        agree = agree and reduced.value == reference.value

    verdict = "MATCH" if agree else "MISMATCH"
    text = "\n\n".join(format_result(r, ms, title) for title, r, ms in results) + f"\n\n{verdict}"
    records = [dict(result_record(r, ms), engine=title) for title, r, ms in results]
    emit(cfg, text, records)
    if not agree:
        _logger.error("verify mismatch: oracle %d (word %d), iterative %d (word %d)",
                      reference.value, reference.argmax_word, iterative.value, iterative.argmax_word)
        return ExitCodes.MISMATCH
    return ExitCodes.OK


def run_bench(cfg: RunConfig) -> int:
    """Run the scaling study over min-n..max-n in steps of two."""
    study = ScalingStudy(range(cfg.min_n, cfg.max_n + 1, 2), cfg.trials, cfg.seed)
    rows = study.run()
    text = study.format_table()
    text += f"\nratio increasing in n: {ScalingMetrics.ratios_increasing(rows)}"
    emit(cfg, text, [dict(row.as_record(), cpu=study.cpu) for row in rows])
    if cfg.output_dir:
        study.generate_report(cfg.output_dir)
    return ExitCodes.OK


_COMMANDS = {"compute": run_compute, "verify": run_verify, "bench": run_bench}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))

    try:
        return _COMMANDS[cfg.subcommand](cfg)
    except MatrixParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return ExitCodes.PARSE_ERROR
    except FeasibilityError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return ExitCodes.FEASIBILITY_ERROR
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return ExitCodes.PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
