"""Validated settings of one ``lolrun`` invocation."""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path


class OutputMode(Enum):
    INTERLEAVED = "interleaved"
    PER_PE = "per-pe"


class DumpMode(Enum):
    NONE = "none"
    TOKENS = "tokens"
    AST = "ast"


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run; there is no other configuration source.

    Raises
    ------
    ValueError
        On construction, when a field is out of range.
    """

    source_path: Path
    n_pes: int = 1
    seed: int = 0
    output_mode: OutputMode = OutputMode.INTERLEAVED
    dump: DumpMode = DumpMode.NONE
    max_barrier_wait: float = 5.0
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.n_pes < 1:
            raise ValueError(f"--np must be at least 1, got {self.n_pes}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"--seed must be in [0, 2**64), got {self.seed}")
        if self.max_barrier_wait <= 0:
            raise ValueError(
                f"--max-barrier-wait must be positive, got {self.max_barrier_wait}"
            )
