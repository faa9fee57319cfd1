"""SPMD substrate: symmetric heap, barriers, global locks and per-PE RNG."""
