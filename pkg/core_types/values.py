"""Tagged runtime values."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from diagnostics import LolRuntimeError

NUMBR_MIN = -(2**63)
NUMBR_MAX = 2**63 - 1


class Tag(Enum):
    """Runtime type tags."""

    NOOB = "NOOB"
    TROOF = "TROOF"
    NUMBR = "NUMBR"
    NUMBAR = "NUMBAR"
    YARN = "YARN"
    ARRAY = "ARRAY"


NUMERIC_TAGS = frozenset({Tag.NUMBR, Tag.NUMBAR})

# Storage dtype used for array cells of each element type.
ELEMENT_DTYPES = {
    Tag.NUMBR: np.int64,
    Tag.NUMBAR: np.float64,
    Tag.TROOF: np.bool_,
    Tag.YARN: object,
}


@dataclass(frozen=True, slots=True)
class Value:
    """An immutable runtime value.

    ``payload`` is ``None`` for NOOB, ``bool`` for TROOF, ``int`` for NUMBR,
    ``float`` for NUMBAR, ``str`` for YARN and a tuple of element payloads
    for ARRAY (with ``element_tag`` naming their type).
    """

    tag: Tag
    payload: object = None
    element_tag: Tag | None = None

    @classmethod
    def numbr(cls, number: int) -> "Value":
        """Build a NUMBR, refusing results outside the signed 64-bit range."""
        if not NUMBR_MIN <= number <= NUMBR_MAX:
            raise LolRuntimeError(f"NUMBR overflow: {number}")
        return cls(Tag.NUMBR, int(number))

    @classmethod
    def numbar(cls, number: float) -> "Value":
        """Build a NUMBAR, refusing NaN and infinities."""
        number = float(number)
        if not math.isfinite(number):
            raise LolRuntimeError(f"NUMBAR result is not finite: {number}")
        return cls(Tag.NUMBAR, number)

    @classmethod
    def troof(cls, flag: bool) -> "Value":
        return WIN if flag else FAIL

    @classmethod
    def yarn(cls, text: str) -> "Value":
        return cls(Tag.YARN, text)

    @classmethod
    def array(cls, element_tag: Tag, elements: tuple) -> "Value":
        return cls(Tag.ARRAY, tuple(elements), element_tag)

    @property
    def is_numeric(self) -> bool:
        return self.tag in NUMERIC_TAGS

    def __repr__(self) -> str:
        if self.tag is Tag.NOOB:
            return "NOOB"
        if self.tag is Tag.ARRAY:
            return f"ARRAY<{self.element_tag.value}>[{len(self.payload)}]"
        return f"{self.tag.value}({self.payload!r})"


NOOB = Value(Tag.NOOB)
WIN = Value(Tag.TROOF, True)
FAIL = Value(Tag.TROOF, False)


def zero_value(tag: Tag) -> Value:
    """Return the zero value a fresh slot of ``tag`` starts with.

    Parameters
    ----------
    tag : Tag
        Scalar type tag.

    Returns
    -------
    Value
        ``0``, ``0.0``, ``FAIL``, ``""`` or NOOB.
    """
    zeros = {
        Tag.NOOB: NOOB,
        Tag.TROOF: FAIL,
        Tag.NUMBR: Value(Tag.NUMBR, 0),
        Tag.NUMBAR: Value(Tag.NUMBAR, 0.0),
        Tag.YARN: Value(Tag.YARN, ""),
    }
    if tag not in zeros:
        raise LolRuntimeError(f"{tag.value} has no scalar zero value")
    return zeros[tag]
