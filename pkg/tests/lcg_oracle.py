"""Standalone reference for the per-PE random streams.

Kept free of package imports so it checks the runtime independently.
"""

MASK = (1 << 64) - 1


def stream(seed, pe):
    state = (seed + (pe + 1) * 0x9E3779B97F4A7C15) & MASK
    while True:
        state = (state * 6364136223846793005 + 1442695040888963407) & MASK
        yield state


def ints(seed, pe, count):
    states = stream(seed, pe)
    return [next(states) >> 33 for _ in range(count)]


def floats(seed, pe, count):
    states = stream(seed, pe)
    return [(next(states) >> 11) * 2.0**-53 for _ in range(count)]
