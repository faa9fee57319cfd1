"""Casts, truthiness and display formatting."""

import math
import re

from core_types.values import FAIL, NOOB, Tag, Value, WIN, zero_value
from diagnostics import CastError, LolRuntimeError

_NUMBR_TEXT = re.compile(r"-?\d+")
_NUMBAR_TEXT = re.compile(r"-?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?")


def parse_numeric(text: str) -> Value:
    """Parse a whole YARN as a numeric literal.

    Parameters
    ----------
    text : str
        Text to parse; surrounding whitespace is not accepted.

    Returns
    -------
    Value
        A NUMBR when the text is an integer literal, a NUMBAR otherwise.

    Raises
    ------
    CastError
        If the text is not a numeric literal.
    """
    if _NUMBR_TEXT.fullmatch(text):
        return Value.numbr(int(text))
    if _NUMBAR_TEXT.fullmatch(text):
        return Value.numbar(float(text))
    raise CastError(f"cannot cast YARN {text!r} to a number")


def truthiness(value: Value) -> bool:
    """Return the boolean meaning of a scalar value.

    Parameters
    ----------
    value : Value
        Any scalar value.

    Returns
    -------
    bool
        False for FAIL, 0, 0.0, the empty YARN and NOOB; True otherwise.

    Raises
    ------
    LolRuntimeError
        If the value is an array.
    """
    if value.tag is Tag.ARRAY:
        raise LolRuntimeError("an array has no truth value")
    if value.tag is Tag.NOOB:
        return False
    return bool(value.payload)


def display(value: Value) -> str:
    """Format a scalar value the way VISIBLE prints it.

    NUMBARs use the shortest decimal text that reads back to the same
    float, which ``repr`` provides.

    Parameters
    ----------
    value : Value
        Any scalar value.

    Returns
    -------
    str
        Printable text.

    Raises
    ------
    LolRuntimeError
        If the value is an array.
    """
    if value.tag is Tag.ARRAY:
        raise LolRuntimeError("a whole array cannot be displayed")
    if value.tag is Tag.NOOB:
        return "NOOB"
    if value.tag is Tag.TROOF:
        return "WIN" if value.payload else "FAIL"
    if value.tag is Tag.NUMBAR:
        return repr(value.payload)
    return str(value.payload)


def coerce(value: Value, target: Tag) -> Value:
    """Convert a scalar value to another scalar type.

    Parameters
    ----------
    value : Value
        Source value.
    target : Tag
        Requested type; must not be ARRAY.

    Returns
    -------
    Value
        The converted value. NUMBAR to NUMBR truncates toward zero and NOOB
        becomes the target's zero value.

    Raises
    ------
    CastError
        If either side is an array or a YARN is not a numeric literal.
    """
    if target is Tag.ARRAY or value.tag is Tag.ARRAY:
        raise CastError("arrays cannot be cast")
    if value.tag is target:
        return value
    if target is Tag.NOOB:
        return NOOB
    if value.tag is Tag.NOOB:
        return zero_value(target)
    if target is Tag.TROOF:
        return WIN if truthiness(value) else FAIL
    if target is Tag.YARN:
        return Value.yarn(display(value))

    if value.tag is Tag.YARN:
        value = parse_numeric(value.payload)
        if value.tag is target:
            return value
    if target is Tag.NUMBR:
        if value.tag is Tag.NUMBAR:
            return Value.numbr(math.trunc(value.payload))
        return Value.numbr(int(value.payload))
    return Value.numbar(float(value.payload))
