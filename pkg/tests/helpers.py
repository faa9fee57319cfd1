"""Paths and small runners shared by the test modules."""

from pathlib import Path

from parsing.parser import parse_source
from pgas_runtime.launcher import RunResult, spawn

ROOT = Path(__file__).resolve().parent.parent
PROGRAMS = ROOT / "programs"
FRAGMENTS = PROGRAMS / "fragments"
GOLDEN = Path(__file__).resolve().parent / "golden"


def run_source(source: str, n_pes: int = 1, **options) -> RunResult:
    """Parse ``source`` and run it; options go straight to ``spawn``."""
    options.setdefault("max_barrier_wait", 2.0)
    return spawn(parse_source(source), n_pes, **options)


def program(*lines: str) -> str:
    """Wrap statement lines in HAI 1.2 ... KTHXBYE."""
    return "\n".join(["HAI 1.2", *lines, "KTHXBYE"]) + "\n"
