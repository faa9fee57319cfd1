"""Token kinds, the keyword phrase table and the Token record."""

from dataclasses import dataclass, field
from enum import Enum

from diagnostics import Span


class TokenKind(Enum):
    """Kinds of non-keyword tokens."""

    IDENTIFIER = "identifier"
    NUMBR_LITERAL = "numbr-literal"
    NUMBAR_LITERAL = "numbar-literal"
    YARN_LITERAL = "yarn-literal"
    SEPARATOR = "separator"
    INDEX_MARKER = "array-index-marker"


class Keyword(Enum):
    """Keyword ids; every multi-word phrase maps to exactly one id."""

    HAI = "HAI"
    KTHXBYE = "KTHXBYE"
    CAN_HAS = "CAN HAS"
    QUESTION = "?"
    VISIBLE = "VISIBLE"
    GIMMEH = "GIMMEH"
    I_HAS_A = "I HAS A"
    WE_HAS_A = "WE HAS A"
    ITZ = "ITZ"
    ITZ_A = "ITZ A"
    ITZ_SRSLY_A = "ITZ SRSLY A"
    ITZ_LOTZ_A = "ITZ LOTZ A"
    ITZ_SRSLY_LOTZ_A = "ITZ SRSLY LOTZ A"
    THAR_IZ = "THAR IZ"
    IM_SHARIN_IT = "IM SHARIN IT"
    R = "R"
    AN = "AN"
    SUM_OF = "SUM OF"
    DIFF_OF = "DIFF OF"
    PRODUKT_OF = "PRODUKT OF"
    QUOSHUNT_OF = "QUOSHUNT OF"
    MOD_OF = "MOD OF"
    BOTH_SAEM = "BOTH SAEM"
    DIFFRINT = "DIFFRINT"
    BIGGER = "BIGGER"
    SMALLR = "SMALLR"
    BOTH_OF = "BOTH OF"
    EITHER_OF = "EITHER OF"
    WON_OF = "WON OF"
    NOT = "NOT"
    MAEK = "MAEK"
    A = "A"
    IS_NOW_A = "IS NOW A"
    SRS = "SRS"
    O_RLY = "O RLY?"
    YA_RLY = "YA RLY"
    NO_WAI = "NO WAI"
    OIC = "OIC"
    WTF = "WTF?"
    OMG = "OMG"
    OMGWTF = "OMGWTF"
    GTFO = "GTFO"
    IM_IN_YR = "IM IN YR"
    IM_OUTTA_YR = "IM OUTTA YR"
    UPPIN = "UPPIN"
    NERFIN = "NERFIN"
    YR = "YR"
    TIL = "TIL"
    WILE = "WILE"
    ME = "ME"
    MAH_FRENZ = "MAH FRENZ"
    IM_SRSLY_MESIN_WIF = "IM SRSLY MESIN WIF"
    IM_MESIN_WIF = "IM MESIN WIF"
    DUN_MESIN_WIF = "DUN MESIN WIF"
    HUGZ = "HUGZ"
    TXT_MAH_BFF = "TXT MAH BFF"
    AN_STUFF = "AN STUFF"
    TTYL = "TTYL"
    UR = "UR"
    MAH = "MAH"
    WHATEVR = "WHATEVR"
    WHATEVAR = "WHATEVAR"
    SQUAR_OF = "SQUAR OF"
    UNSQUAR_OF = "UNSQUAR OF"
    FLIP_OF = "FLIP OF"
    WIN = "WIN"
    FAIL = "FAIL"
    NOOB = "NOOB"
    TROOF = "TROOF"
    NUMBR = "NUMBR"
    NUMBAR = "NUMBAR"
    YARN = "YARN"
    TROOFS = "TROOFS"
    NUMBRS = "NUMBRS"
    NUMBARS = "NUMBARS"
    YARNS = "YARNS"


@dataclass(frozen=True)
class KeywordPhrase:
    """An ordered run of uppercase words recognised as one keyword."""

    words: tuple[str, ...]
    kind: Keyword


def _phrase(text: str, kind: Keyword) -> KeywordPhrase:
    return KeywordPhrase(tuple(text.replace("?", " ?").split()), kind)


# Alternate spellings that resolve to an existing keyword id.
_ALIASES = {
    "TXN MAH BFF": Keyword.TXT_MAH_BFF,
}

KEYWORD_PHRASES: tuple[KeywordPhrase, ...] = tuple(
    sorted(
        [_phrase(keyword.value, keyword) for keyword in Keyword]
        + [_phrase(text, keyword) for text, keyword in _ALIASES.items()],
        key=lambda phrase: len(phrase.words),
        reverse=True,
    )
)

# First word -> candidate phrases, longest first.
PHRASES_BY_FIRST_WORD: dict[str, list[KeywordPhrase]] = {}
for _entry in KEYWORD_PHRASES:
    PHRASES_BY_FIRST_WORD.setdefault(_entry.words[0], []).append(_entry)

TYPE_KEYWORDS = {
    Keyword.NOOB,
    Keyword.TROOF,
    Keyword.NUMBR,
    Keyword.NUMBAR,
    Keyword.YARN,
}
PLURAL_TYPE_KEYWORDS = {
    Keyword.TROOFS: Keyword.TROOF,
    Keyword.NUMBRS: Keyword.NUMBR,
    Keyword.NUMBARS: Keyword.NUMBAR,
    Keyword.YARNS: Keyword.YARN,
}


@dataclass(frozen=True)
class Token:
    """One lexeme of a program.

    ``kind`` is a ``Keyword`` for keyword tokens and a ``TokenKind`` for
    everything else. ``value`` holds the decoded payload of literals and,
    for separators, the whole run of newlines and commas they stand for.
    """

    kind: Keyword | TokenKind
    text: str
    span: Span
    value: object = field(default=None, compare=False)

    @property
    def kind_name(self) -> str:
        return self.kind.name

    def __repr__(self) -> str:
        return f"Token({self.kind_name}, {self.text!r}, {self.span})"
