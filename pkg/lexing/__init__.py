"""Lexical analysis: source text to tokens."""
