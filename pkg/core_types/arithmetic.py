"""Binary and unary operators over runtime values."""

import math
from enum import Enum

from core_types.conversions import coerce, parse_numeric, truthiness
from core_types.values import FAIL, Tag, Value, WIN
from diagnostics import CastError, LolRuntimeError


class BinaryOp(Enum):
    """Operators written ``OP a AN b``."""

    SUM = "SUM OF"
    DIFF = "DIFF OF"
    PRODUKT = "PRODUKT OF"
    QUOSHUNT = "QUOSHUNT OF"
    MOD = "MOD OF"
    BOTH_SAEM = "BOTH SAEM"
    DIFFRINT = "DIFFRINT"
    BIGGER = "BIGGER"
    SMALLR = "SMALLR"
    BOTH_OF = "BOTH OF"
    EITHER_OF = "EITHER OF"
    WON_OF = "WON OF"


class UnaryOp(Enum):
    """Operators written ``OP a``."""

    SQUAR = "SQUAR OF"
    UNSQUAR = "UNSQUAR OF"
    FLIP = "FLIP OF"
    NOT = "NOT"


def _as_number(value: Value) -> Value:
    """Return a NUMBR or NUMBAR for an operand of an arithmetic operator."""
    if value.is_numeric:
        return value
    if value.tag is Tag.TROOF:
        return coerce(value, Tag.NUMBR)
    if value.tag is Tag.YARN:
        return parse_numeric(value.payload)
    if value.tag is Tag.NOOB:
        raise LolRuntimeError("cannot do math with NOOB")
    raise LolRuntimeError("cannot do math with a whole array")


def _promote(a: Value, b: Value) -> tuple[int | float, int | float, bool]:
    """Return both operands as Python numbers plus whether float math applies."""
    a, b = _as_number(a), _as_number(b)
    floating = Tag.NUMBAR in (a.tag, b.tag)
    if floating:
        return float(a.payload), float(b.payload), True
    return a.payload, b.payload, False


def _truncating_divide(a: int, b: int) -> int:
    quotient = abs(a) // abs(b)
    return -quotient if (a < 0) != (b < 0) else quotient


def _equal(a: Value, b: Value) -> bool:
    if Tag.ARRAY in (a.tag, b.tag):
        raise LolRuntimeError("whole arrays cannot be compared")
    if a.tag is Tag.YARN and b.tag is Tag.YARN:
        return a.payload == b.payload
    if Tag.NOOB in (a.tag, b.tag):
        return a.tag is b.tag
    if a.tag is Tag.TROOF and b.tag is Tag.TROOF:
        return a.payload == b.payload
    try:
        x, y, _ = _promote(a, b)
    except CastError:
        return False
    return x == y


def arith(op: BinaryOp, a: Value, b: Value) -> Value:
    """Apply a binary operator.

    Parameters
    ----------
    op : BinaryOp
        The operator.
    a, b : Value
        Operands. Arithmetic promotes to NUMBAR when either side is a
        NUMBAR; YARN and TROOF operands are converted first.

    Returns
    -------
    Value
        NUMBR/NUMBAR for arithmetic, TROOF for comparisons and logic.

    Raises
    ------
    LolRuntimeError
        On division or modulus by zero, ordering YARNs, overflow, a
        non-finite NUMBAR result, or an operand with no numeric value.
    """
    if op is BinaryOp.BOTH_SAEM:
        return WIN if _equal(a, b) else FAIL
    if op is BinaryOp.DIFFRINT:
        return FAIL if _equal(a, b) else WIN
    if op is BinaryOp.BOTH_OF:
        return Value.troof(truthiness(a) and truthiness(b))
    if op is BinaryOp.EITHER_OF:
        return Value.troof(truthiness(a) or truthiness(b))
    if op is BinaryOp.WON_OF:
        return Value.troof(truthiness(a) != truthiness(b))

    if op in (BinaryOp.BIGGER, BinaryOp.SMALLR):
        if Tag.YARN in (a.tag, b.tag):
            raise LolRuntimeError(f"{op.value} cannot order YARN values")
        x, y, _ = _promote(a, b)
        return Value.troof(x > y if op is BinaryOp.BIGGER else x < y)

    x, y, floating = _promote(a, b)
    if op is BinaryOp.SUM:
        result = x + y
    elif op is BinaryOp.DIFF:
        result = x - y
    elif op is BinaryOp.PRODUKT:
        result = x * y
    else:
        if y == 0:
            raise LolRuntimeError("division by zero")
        if op is BinaryOp.QUOSHUNT:
            result = x / y if floating else _truncating_divide(x, y)
        elif floating:
            result = math.fmod(x, y)
        else:
            result = x - y * _truncating_divide(x, y)
    return Value.numbar(result) if floating else Value.numbr(result)


def math_unary(op: UnaryOp, value: Value) -> Value:
    """Apply a unary operator.

    Parameters
    ----------
    op : UnaryOp
        The operator.
    value : Value
        Operand.

    Returns
    -------
    Value
        ``SQUAR`` keeps the operand's numeric type; ``UNSQUAR`` and
        ``FLIP`` return NUMBARs; ``NOT`` returns a TROOF.

    Raises
    ------
    LolRuntimeError
        On the square root of a negative number or the reciprocal of zero.
    """
    if op is UnaryOp.NOT:
        return Value.troof(not truthiness(value))
    number = _as_number(value)
    if op is UnaryOp.SQUAR:
        if number.tag is Tag.NUMBR:
            return Value.numbr(number.payload * number.payload)
        return Value.numbar(number.payload * number.payload)
    if op is UnaryOp.UNSQUAR:
        if number.payload < 0:
            raise LolRuntimeError(
                f"square root of negative number {number.payload}"
            )
        return Value.numbar(math.sqrt(number.payload))
    if number.payload == 0:
        raise LolRuntimeError("division by zero")
    return Value.numbar(1.0 / float(number.payload))
