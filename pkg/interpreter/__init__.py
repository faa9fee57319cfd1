"""Execution of one PE's copy of a parsed program."""
