"""
Tokenizer for LOLCODE source text.

Scanning happens in two passes. The first pass walks the text with a
combined regular expression and produces raw atoms (words, literals,
separators), dropping comments and joining continued lines. The second
pass folds runs of words into keyword phrases, longest phrase first, and
collapses separator runs.
"""

import re
from dataclasses import dataclass, replace

from diagnostics import LexError, Span
from lexing.tokens import PHRASES_BY_FIRST_WORD, Keyword, Token, TokenKind

_ATOM_PATTERN = re.compile(
    r"""
    (?P<SKIP>[ \t\r\f]+)
  | (?P<CONTINUATION>(?:\.\.\.|…)[ \t\r]*(?:\n|\Z))
  | (?P<NEWLINE>\n)
  | (?P<COMMA>,)
  | (?P<STRING>")
  | (?P<NUMBAR>-?(?:\d+\.\d+|\d+\.(?![.\d])|\.\d+))
  | (?P<NUMBR>-?\d+)
  | (?P<INDEX>'[Zz](?![A-Za-z0-9_]))
  | (?P<WORD>[A-Za-z][A-Za-z0-9_]*)
  | (?P<QUESTION>\?)
  | (?P<MISMATCH>.)
    """,
    re.VERBOSE,
)

_TLDR_PATTERN = re.compile(r"(?<![A-Za-z0-9_])TLDR(?![A-Za-z0-9_])")

_ESCAPES = {")": "\n", ">": "\t", ":": ":", "o": "\a"}

# Tokens after which a leading '-' cannot start a numeric literal.
_EXPRESSION_FINAL = {
    TokenKind.IDENTIFIER,
    TokenKind.NUMBR_LITERAL,
    TokenKind.NUMBAR_LITERAL,
    TokenKind.YARN_LITERAL,
    Keyword.ME,
    Keyword.MAH_FRENZ,
    Keyword.WHATEVR,
    Keyword.WHATEVAR,
    Keyword.WIN,
    Keyword.FAIL,
    Keyword.NOOB,
}


@dataclass
class _Atom:
    kind: str
    text: str
    span: Span
    value: object = None


class _Scanner:
    """First pass: raw atoms with comments and continuations removed."""

    def __init__(self, source: str) -> None:
        self.source = source
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.atoms: list[_Atom] = []

    def span_at(self, pos: int) -> Span:
        return Span(self.line, pos - self.line_start + 1)

    def newline_at(self, pos: int) -> None:
        self.line += 1
        self.line_start = pos + 1

    def scan(self) -> list[_Atom]:
        while self.pos < len(self.source):
            match = _ATOM_PATTERN.match(self.source, self.pos)
            assert match is not None
            kind = match.lastgroup
            text = match.group()
            start = self.pos
            self.pos = match.end()

            if kind == "SKIP":
                continue
            if kind == "CONTINUATION":
                if text.endswith("\n"):
                    self.newline_at(self.pos - 1)
                continue
            if kind == "NEWLINE":
                self.atoms.append(_Atom("SEP", "\n", self.span_at(start)))
                self.newline_at(start)
                continue
            if kind == "COMMA":
                self.atoms.append(_Atom("SEP", ",", self.span_at(start)))
                continue
            if kind == "STRING":
                self.scan_string(start)
                continue
            if kind == "WORD" and text == "BTW":
                self.skip_line_comment()
                continue
            if kind == "WORD" and text == "OBTW":
                self.skip_block_comment(start)
                continue
            if kind == "MISMATCH":
                raise LexError(
                    f"unexpected character {text!r}", self.span_at(start)
                )
            self.atoms.append(_Atom(kind, text, self.span_at(start)))
        return self.atoms

    def skip_line_comment(self) -> None:
        end = self.source.find("\n", self.pos)
        self.pos = len(self.source) if end == -1 else end

    def skip_block_comment(self, start: int) -> None:
        match = _TLDR_PATTERN.search(self.source, self.pos)
        if match is None:
            raise LexError("unterminated OBTW comment", self.span_at(start))
        for offset in range(self.pos, match.start()):
            if self.source[offset] == "\n":
                self.newline_at(offset)
        self.pos = match.end()

    def scan_string(self, start: int) -> None:
        span = self.span_at(start)
        line_end = self.source.find("\n", start)
        if line_end == -1:
            line_end = len(self.source)
        chars: list[str] = []
        pos = start + 1
        while pos < line_end:
            char = self.source[pos]
            if char == '"':
                self.pos = pos + 1
                self.atoms.append(
                    _Atom("YARN", self.source[start : pos + 1], span, "".join(chars))
                )
                return
            if char == ":" and pos + 1 < line_end:
                escaped = self.source[pos + 1]
                if escaped == '"':
                    # An escaped quote needs a real closing quote later on the line.
                    if '"' in self.source[pos + 2 : line_end]:
                        chars.append('"')
                        pos += 2
                        continue
                    chars.append(":")
                    pos += 1
                    continue
                if escaped in _ESCAPES:
                    chars.append(_ESCAPES[escaped])
                    pos += 2
                    continue
            chars.append(char)
            pos += 1
        raise LexError("unterminated string literal", span)


def _merge_phrase(atoms: list[_Atom], index: int) -> tuple[Keyword, str, int] | None:
    """Return the longest keyword phrase starting at ``atoms[index]``."""
    first = atoms[index].text
    for phrase in PHRASES_BY_FIRST_WORD.get(first, []):
        width = len(phrase.words)
        window = atoms[index : index + width]
        if len(window) < width:
            continue
        if all(
            atom.kind in ("WORD", "QUESTION") and atom.text == word
            for atom, word in zip(window, phrase.words)
        ):
            text = " ".join(phrase.words).replace(" ?", "?")
            return phrase.kind, text, width
    return None


def tokenize(source: str) -> list[Token]:
    """Convert LOLCODE source text into a list of tokens.

    Parameters
    ----------
    source : str
        Program text.

    Returns
    -------
    list of Token
        Tokens in source order. Comments produce no tokens, continued lines
        are joined, and every run of newlines/commas becomes a single
        separator token.

    Raises
    ------
    LexError
        On an unterminated string or ``OBTW`` comment, a stray character,
        or a ``-`` that cannot start a numeric literal.
    """
    atoms = _Scanner(source).scan()
    tokens: list[Token] = []
    index = 0
    while index < len(atoms):
        atom = atoms[index]
        if atom.kind == "SEP":
            if tokens and tokens[-1].kind is TokenKind.SEPARATOR:
                run = tokens[-1].value + atom.text
                tokens[-1] = replace(tokens[-1], value=run)
            elif tokens:
                tokens.append(
                    Token(TokenKind.SEPARATOR, atom.text, atom.span, atom.text)
                )
            index += 1
            continue

        if atom.kind in ("WORD", "QUESTION"):
            merged = _merge_phrase(atoms, index)
            if merged is not None:
                keyword, text, width = merged
                tokens.append(Token(keyword, text, atom.span))
                index += width
                continue
            if atom.kind == "QUESTION":
                raise LexError("unexpected '?'", atom.span)
            tokens.append(Token(TokenKind.IDENTIFIER, atom.text, atom.span))
            index += 1
            continue

        if atom.kind in ("NUMBR", "NUMBAR"):
            if atom.text.startswith("-") and tokens:
                if tokens[-1].kind in _EXPRESSION_FINAL:
                    raise LexError(
                        "'-' is not an operator; use DIFF OF", atom.span
                    )
            if atom.kind == "NUMBR":
                tokens.append(
                    Token(TokenKind.NUMBR_LITERAL, atom.text, atom.span, int(atom.text))
                )
            else:
                tokens.append(
                    Token(
                        TokenKind.NUMBAR_LITERAL,
                        atom.text,
                        atom.span,
                        float(atom.text),
                    )
                )
        elif atom.kind == "YARN":
            tokens.append(
                Token(TokenKind.YARN_LITERAL, atom.text, atom.span, atom.value)
            )
        elif atom.kind == "INDEX":
            tokens.append(Token(TokenKind.INDEX_MARKER, atom.text, atom.span))
        index += 1
    return tokens
