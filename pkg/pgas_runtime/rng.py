"""Deterministic per-PE random streams behind WHATEVR and WHATEVAR."""

from core_types.values import Value

MASK_64 = 2**64 - 1
MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
STREAM_SPACING = 0x9E3779B97F4A7C15


class PeRandom:
    """64-bit linear congruential generator, one stream per PE.

    The stream is fully determined by ``(seed, pe)``, so any other
    implementation of the same recurrence reproduces it draw for draw.

    Parameters
    ----------
    seed : int
        Run seed in [0, 2**64).
    pe : int
        Processing element id.
    """

    def __init__(self, seed: int, pe: int) -> None:
        self.state = (seed + (pe + 1) * STREAM_SPACING) & MASK_64

    def step(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK_64
        return self.state

    def next_int(self) -> Value:
        """Advance once and return a NUMBR in [0, 2**31)."""
        return Value.numbr(self.step() >> 33)

    def next_float(self) -> Value:
        """Advance once and return a NUMBAR in [0, 1) with 53 random bits."""
        return Value.numbar((self.step() >> 11) * 2.0**-53)
