"""Runtime values, typing rules, conversions and arithmetic."""
