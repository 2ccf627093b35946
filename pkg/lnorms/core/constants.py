"""
Named constants and parameter classes for lnorms computations.

This module contains all named constants, removing magic numbers from the codebase.
Solve modes and run configuration live here as small validated dataclasses.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class WordConstants:
    """Machine-word limits of the Gray-code enumeration."""
    WORD_BITS = 64
    GRAY_BITS = WORD_BITS - 2          # longest Gray code whose word count fits
    ABS_SUM_LIMIT = 1 << 62            # Σ|M_xy| must stay strictly below this
    INT64_MIN = -(1 << 63)
    INT64_MAX = (1 << 63) - 1


class OracleConstants:
    """Desk-scale guard for the naive enumerator."""
    MAX_WORDS = 1 << 28


@dataclass(frozen=True)
class BenchConstants:
    """Defaults for the naive-versus-iterative scaling benchmark."""
    MIN_N: int = 14
    MAX_N: int = 26
    DEFAULT_SIZES: Tuple[int, ...] = (18, 20, 22)
    DEFAULT_TRIALS: int = 3
    ENTRY_LOW: int = -9
    ENTRY_HIGH: int = 9
    DEFAULT_SEED: int = 2024


class ExitCodes:
    """Process exit statuses of the command-line front door."""
    OK = 0
    MISMATCH = 1
    PARSE_ERROR = 2
    FEASIBILITY_ERROR = 3


class ModeTag(str, Enum):
    """Which norm is being maximised."""
    L1 = "l1"
    MARG = "marg"
    LD = "ld"


@dataclass(frozen=True)
class SolveMode:
    """
    Norm selector.

    L1 and MARG enumerate sign strategies and always carry d = 2 (binary Gray code);
    LD carries the message alphabet size d >= 2.
    """
    tag: ModeTag
    d: int = 2

    def __post_init__(self):
        if self.tag is ModeTag.LD and self.d < 2:
            raise ValueError(f"LD mode requires d >= 2, got d={self.d}")
        if self.tag is not ModeTag.LD and self.d != 2:
            raise ValueError(f"{self.tag.value} mode uses a binary alphabet, got d={self.d}")

    @classmethod
    def l1(cls) -> 'SolveMode':
        return cls(ModeTag.L1)

    @classmethod
    def marg(cls) -> 'SolveMode':
        return cls(ModeTag.MARG)

    @classmethod
    def ld(cls, d: int) -> 'SolveMode':
        return cls(ModeTag.LD, d)

    @property
    def is_sign_mode(self) -> bool:
        """True when strategies are ±1 vectors (L1, MARG)."""
        return self.tag is not ModeTag.LD

    @property
    def label(self) -> str:
        if self.tag is ModeTag.LD:
            return f"L{self.d}"
        return "L1" if self.tag is ModeTag.L1 else "Lmarg"


@dataclass
class RunConfig:
    """Parameters of one command-line run."""
    subcommand: str = "compute"
    input_path: Optional[str] = None
    mode: ModeTag = ModeTag.L1
    d: Optional[int] = None
    workers: Optional[int] = None
    preprocess: bool = True
    output_format: str = "text"
    seed: int = BenchConstants.DEFAULT_SEED
    min_n: int = BenchConstants.DEFAULT_SIZES[0]
    max_n: int = BenchConstants.DEFAULT_SIZES[-1]
    trials: int = BenchConstants.DEFAULT_TRIALS
    output_dir: Optional[str] = None

    def __post_init__(self):
        self.mode = ModeTag(self.mode)
        if self.subcommand not in ("compute", "verify", "bench"):
            raise ValueError(f"Unknown subcommand: {self.subcommand}")
        if self.output_format not in ("text", "jsonl"):
            raise ValueError(f"Unknown output format: {self.output_format}")
        if self.mode is ModeTag.LD:
            if self.d is None or self.d < 2:
                raise ValueError("--d N with N >= 2 is required with --mode ld")
        elif self.d is not None:
            raise ValueError(f"--d is only meaningful with --mode ld, not {self.mode.value}")
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"--threads must be >= 1, got {self.workers}")
        if self.subcommand == "bench":
            self._validate_bench()
        elif self.input_path is None:
            raise ValueError(f"{self.subcommand} needs an input path ('-' for stdin)")

    def _validate_bench(self) -> None:
        if not BenchConstants.MIN_N <= self.min_n <= self.max_n <= BenchConstants.MAX_N:
            raise ValueError(
                f"bench sizes must satisfy {BenchConstants.MIN_N} <= min-n <= max-n "
                f"<= {BenchConstants.MAX_N}, got {self.min_n}..{self.max_n}"
            )
        if self.trials < 1:
            raise ValueError(f"--trials must be >= 1, got {self.trials}")

    def solve_mode(self) -> SolveMode:
        """Build the SolveMode selected by this configuration."""
        if self.mode is ModeTag.LD:
            return SolveMode.ld(self.d)
        return SolveMode(self.mode)
