"""The ``lolrun`` command."""
