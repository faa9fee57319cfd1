"""Bundled example programs offered in the playground."""

from pathlib import Path

SAMPLES_DIR = Path(__file__).resolve().parent.parent / "programs"
DEFAULT_SAMPLE = "hello.lol"


def list_samples() -> list[str]:
    """Return the file names of the bundled programs, sorted.

    Returns
    -------
    list of str
        Names such as ``"ring_copy.lol"``; fragments are not included.
    """
    return sorted(path.name for path in SAMPLES_DIR.glob("*.lol"))


def load_sample(name: str) -> str:
    """Read a bundled program by file name."""
    return (SAMPLES_DIR / name).read_text(encoding="utf-8")
