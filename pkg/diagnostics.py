"""
Source spans and the error hierarchy shared by every stage of the pipeline.
"""

from typing import NamedTuple


class Span(NamedTuple):
    """1-based line and column of a source position."""

    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class LolError(Exception):
    """Base class for every diagnostic raised while handling a program.

    Parameters
    ----------
    message : str
        Human readable description of the problem.
    span : Span or None, optional
        Source position the problem is attached to.
    """

    kind = "error"

    def __init__(self, message: str, span: Span | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        if self.span is None:
            return self.message
        return f"{self.span}: {self.message}"


class LexError(LolError):
    """Raised when source text cannot be split into tokens."""

    kind = "lex error"


class ParseError(LolError):
    """Raised when a token stream does not form a valid program.

    Parameters
    ----------
    message : str
        Description of the problem.
    span : Span or None, optional
        Position of the offending token.
    construct : str, optional
        Name of the construct being parsed when the error occurred.
    """

    kind = "parse error"

    def __init__(
        self, message: str, span: Span | None = None, construct: str = ""
    ) -> None:
        if construct:
            message = f"{message} (while parsing {construct})"
        super().__init__(message, span)
        self.construct = construct


class LolRuntimeError(LolError):
    """Raised while executing a program on one processing element.

    Parameters
    ----------
    message : str
        Description of the problem.
    span : Span or None, optional
        Position of the statement being executed.
    pe : int or None, optional
        Processing element that raised the error.
    """

    kind = "runtime error"

    def __init__(
        self, message: str, span: Span | None = None, pe: int | None = None
    ) -> None:
        super().__init__(message, span)
        self.pe = pe

    def attach(self, span: Span | None, pe: int | None) -> "LolRuntimeError":
        """Fill in the span and PE id when they are not already known."""
        if self.span is None:
            self.span = span
        if self.pe is None:
            self.pe = pe
        return self


class CastError(LolRuntimeError):
    """Raised when a value cannot be converted to the requested type."""

    kind = "cast error"


class SymmetryError(LolRuntimeError):
    """Raised when PEs disagree on the shape of a symmetric declaration."""

    kind = "symmetry error"


def format_diagnostic(path: str, error: LolError) -> str:
    """Render an error as ``file:line:col: kind: message``.

    Parameters
    ----------
    path : str
        Name of the source file the error belongs to.
    error : LolError
        The error to render.

    Returns
    -------
    str
        One-line diagnostic, prefixed with ``[pe N]`` for runtime errors
        raised on a known processing element.
    """
    location = path if error.span is None else f"{path}:{error.span}"
    prefix = ""
    if isinstance(error, LolRuntimeError) and error.pe is not None:
        prefix = f"[pe {error.pe}] "
    return f"{location}: {prefix}{error.kind}: {error.message}"
