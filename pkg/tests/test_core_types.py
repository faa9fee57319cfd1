import math
import random

import pytest

from core_types.arithmetic import BinaryOp, UnaryOp, arith, math_unary
from core_types.conversions import coerce, display, parse_numeric, truthiness
from core_types.slots import ArraySlot, VariableSlot, conform
from core_types.values import (
    FAIL,
    NOOB,
    NUMBR_MAX,
    NUMBR_MIN,
    WIN,
    Tag,
    Value,
    zero_value,
)
from diagnostics import CastError, LolRuntimeError

N = Value.numbr
F = Value.numbar
Y = Value.yarn


# --- values --------------------------------------------------------------


def test_numbr_range_is_signed_64_bit():
    assert N(NUMBR_MAX).payload == 2**63 - 1
    with pytest.raises(LolRuntimeError, match="overflow"):
        N(2**63)


def test_numbar_must_be_finite():
    with pytest.raises(LolRuntimeError, match="not finite"):
        F(float("inf"))


@pytest.mark.parametrize(
    "tag, zero",
    [
        (Tag.NUMBR, N(0)),
        (Tag.NUMBAR, F(0.0)),
        (Tag.TROOF, FAIL),
        (Tag.YARN, Y("")),
        (Tag.NOOB, NOOB),
    ],
)
def test_zero_values(tag, zero):
    assert zero_value(tag) == zero


# --- arithmetic ----------------------------------------------------------


@pytest.mark.parametrize(
    "op, a, b, expected",
    [
        (BinaryOp.SUM, N(3), N(4), N(7)),
        (BinaryOp.SUM, N(3), F(0.5), F(3.5)),
        (BinaryOp.DIFF, N(3), N(10), N(-7)),
        (BinaryOp.PRODUKT, F(1.5), N(2), F(3.0)),
        (BinaryOp.QUOSHUNT, N(-7), N(2), N(-3)),
        (BinaryOp.QUOSHUNT, N(7), F(2.0), F(3.5)),
        (BinaryOp.MOD, N(-7), N(2), N(-1)),
        (BinaryOp.MOD, N(7), N(-2), N(1)),
        (BinaryOp.MOD, F(-7.5), N(2), F(-1.5)),
        (BinaryOp.SUM, Y("3"), N(4), N(7)),
        (BinaryOp.SUM, Y("3.5"), N(1), F(4.5)),
        (BinaryOp.SUM, WIN, N(1), N(2)),
    ],
)
def test_arithmetic(op, a, b, expected):
    assert arith(op, a, b) == expected


@pytest.mark.parametrize("op", [BinaryOp.QUOSHUNT, BinaryOp.MOD])
@pytest.mark.parametrize("zero", [N(0), F(0.0)])
def test_division_by_zero(op, zero):
    with pytest.raises(LolRuntimeError, match="division by zero"):
        arith(op, N(1), zero)


def test_numbr_overflow_is_an_error():
    with pytest.raises(LolRuntimeError, match="overflow"):
        arith(BinaryOp.PRODUKT, N(NUMBR_MAX), N(2))


def test_numbar_overflow_is_an_error():
    with pytest.raises(LolRuntimeError, match="not finite"):
        arith(BinaryOp.PRODUKT, F(1e308), F(10.0))


def test_math_on_noob_is_an_error():
    with pytest.raises(LolRuntimeError, match="NOOB"):
        arith(BinaryOp.SUM, NOOB, N(1))


def test_math_on_non_numeric_yarn_is_a_cast_error():
    with pytest.raises(CastError):
        arith(BinaryOp.SUM, Y("abc"), N(1))


@pytest.mark.parametrize(
    "op, a, b, expected",
    [
        (BinaryOp.BOTH_SAEM, N(3), F(3.0), WIN),
        (BinaryOp.BOTH_SAEM, Y("a"), Y("a"), WIN),
        (BinaryOp.BOTH_SAEM, Y("abc"), N(1), FAIL),
        (BinaryOp.BOTH_SAEM, NOOB, NOOB, WIN),
        (BinaryOp.BOTH_SAEM, NOOB, N(0), FAIL),
        (BinaryOp.DIFFRINT, N(1), N(2), WIN),
        (BinaryOp.BIGGER, N(3), F(2.5), WIN),
        (BinaryOp.SMALLR, N(3), N(3), FAIL),
        (BinaryOp.BOTH_OF, N(1), Y(""), FAIL),
        (BinaryOp.EITHER_OF, FAIL, F(0.5), WIN),
        (BinaryOp.WON_OF, WIN, WIN, FAIL),
        (BinaryOp.WON_OF, WIN, FAIL, WIN),
    ],
)
def test_comparisons_and_logic(op, a, b, expected):
    assert arith(op, a, b) is expected


def test_yarns_cannot_be_ordered():
    with pytest.raises(LolRuntimeError, match="cannot order YARN"):
        arith(BinaryOp.BIGGER, Y("a"), Y("b"))


@pytest.mark.parametrize(
    "op, operand, expected",
    [
        (UnaryOp.SQUAR, N(3), N(9)),
        (UnaryOp.SQUAR, F(1.5), F(2.25)),
        (UnaryOp.UNSQUAR, N(4), F(2.0)),
        (UnaryOp.FLIP, N(4), F(0.25)),
        (UnaryOp.NOT, N(0), WIN),
        (UnaryOp.NOT, Y("x"), FAIL),
    ],
)
def test_unary_operators(op, operand, expected):
    assert math_unary(op, operand) == expected


def test_square_root_of_negative_number():
    with pytest.raises(LolRuntimeError, match="negative"):
        math_unary(UnaryOp.UNSQUAR, N(-1))


def test_flip_of_zero():
    with pytest.raises(LolRuntimeError, match="division by zero"):
        math_unary(UnaryOp.FLIP, F(0.0))


# --- conversions ---------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("12", N(12)), ("-3", N(-3)), ("-3.5", F(-3.5)), ("1e3", F(1000.0))],
)
def test_parse_numeric(text, expected):
    assert parse_numeric(text) == expected


@pytest.mark.parametrize("text", ["", " 12", "12abc", "WIN"])
def test_parse_numeric_rejects_other_text(text):
    with pytest.raises(CastError):
        parse_numeric(text)


@pytest.mark.parametrize(
    "value, expected",
    [
        (FAIL, False),
        (N(0), False),
        (F(0.0), False),
        (Y(""), False),
        (NOOB, False),
        (WIN, True),
        (N(-1), True),
        (Y("0"), True),
    ],
)
def test_truthiness(value, expected):
    assert truthiness(value) is expected


@pytest.mark.parametrize(
    "value, text",
    [
        (N(-7), "-7"),
        (F(0.1), "0.1"),
        (F(7.0), "7.0"),
        (WIN, "WIN"),
        (NOOB, "NOOB"),
        (Y("HAI"), "HAI"),
    ],
)
def test_display(value, text):
    assert display(value) == text


@pytest.mark.parametrize(
    "value, target, expected",
    [
        (F(-3.99), Tag.NUMBR, N(-3)),
        (NOOB, Tag.NUMBR, N(0)),
        (NOOB, Tag.YARN, Y("")),
        (N(12), Tag.YARN, Y("12")),
        (Y("3.5"), Tag.NUMBAR, F(3.5)),
        (Y("3.5"), Tag.NUMBR, N(3)),
        (WIN, Tag.NUMBR, N(1)),
        (N(0), Tag.TROOF, FAIL),
        (Y("abc"), Tag.NOOB, NOOB),
    ],
)
def test_coerce(value, target, expected):
    assert coerce(value, target) == expected


def test_arrays_cannot_be_cast():
    with pytest.raises(CastError):
        coerce(Value.array(Tag.NUMBR, (1, 2)), Tag.YARN)


# --- slots ---------------------------------------------------------------


def test_dynamic_slot_retags_freely():
    slot = VariableSlot()
    slot.store(Y("HAI"))
    slot.store(N(5))
    assert slot.load() == N(5)


def test_static_slot_converts_numbers_and_numeric_yarns():
    slot = VariableSlot(static_type=Tag.NUMBR)
    assert slot.store(F(2.7)) == N(2)
    assert slot.store(Y("5")) == N(5)
    assert slot.store(NOOB) == N(0)


def test_static_slot_refuses_other_types():
    with pytest.raises(LolRuntimeError, match="cannot store a TROOF in a NUMBR"):
        VariableSlot(static_type=Tag.NUMBR).store(WIN)
    with pytest.raises(LolRuntimeError, match="cannot store a NUMBR in a YARN"):
        conform(N(1), Tag.YARN)


def test_static_slot_starts_at_zero():
    assert VariableSlot(static_type=Tag.NUMBAR).load() == F(0.0)


def test_shared_slot_needs_a_static_type():
    with pytest.raises(LolRuntimeError, match="statically typed"):
        VariableSlot(is_shared=True)


def test_recast():
    slot = VariableSlot(N(5))
    slot.recast(Tag.YARN)
    assert slot.load() == Y("5")

    static = VariableSlot(N(5), Tag.NUMBR)
    static.recast(Tag.NUMBR)
    with pytest.raises(LolRuntimeError, match="SRSLY"):
        static.recast(Tag.YARN)


def test_array_elements_convert_to_the_element_type():
    slot = ArraySlot(Tag.NUMBR, 3)
    assert slot.load() == Value.array(Tag.NUMBR, (0, 0, 0))
    slot.store_element(1, F(2.9))
    assert slot.load_element(1) == N(2)


@pytest.mark.parametrize("index", [-1, 3])
def test_array_bounds(index):
    with pytest.raises(LolRuntimeError, match="out of bounds"):
        ArraySlot(Tag.NUMBAR, 3).load_element(index)


def test_yarn_and_troof_arrays():
    words = ArraySlot(Tag.YARN, 2)
    words.store_element(1, Y("HAI"))
    assert words.load() == Value.array(Tag.YARN, ("", "HAI"))

    flags = ArraySlot(Tag.TROOF, 2)
    flags.store_element(0, WIN)
    assert flags.load_element(0) == WIN
    assert flags.load_element(1) == FAIL


def test_whole_array_store_needs_the_same_shape():
    slot = ArraySlot(Tag.NUMBR, 2)
    slot.store(Value.array(Tag.NUMBR, (4, 5)))
    assert slot.load_element(1) == N(5)
    with pytest.raises(LolRuntimeError, match="whole-array assignment"):
        slot.store(Value.array(Tag.NUMBR, (1, 2, 3)))
    with pytest.raises(LolRuntimeError, match="whole array"):
        slot.store(N(1))


def test_invalid_arrays():
    with pytest.raises(LolRuntimeError, match="negative"):
        ArraySlot(Tag.NUMBR, -1)
    with pytest.raises(LolRuntimeError, match="cannot hold"):
        ArraySlot(Tag.NOOB, 2)


# --- properties over seeded random values --------------------------------


def random_numbar(rng):
    return F(rng.uniform(-1.0, 1.0) * 10 ** rng.randint(-300, 300))


def random_scalar(rng):
    choice = rng.randrange(5)
    if choice == 0:
        return NOOB
    if choice == 1:
        return Value.troof(rng.random() < 0.5)
    if choice == 2:
        return N(rng.randint(-(10**12), 10**12))
    if choice == 3:
        return F(rng.uniform(-1e12, 1e12))
    return Y(display(N(rng.randint(-1000, 1000))))


@pytest.mark.parametrize("seed", range(5))
def test_unsquar_undoes_squar(seed):
    rng = random.Random(seed)
    for _ in range(200):
        v = rng.uniform(0.0, 1e6)
        squared = math_unary(UnaryOp.SQUAR, F(v))
        root = math_unary(UnaryOp.UNSQUAR, squared)
        assert root.tag is Tag.NUMBAR
        assert math.isclose(root.payload, v, rel_tol=1e-12, abs_tol=1e-300)


@pytest.mark.parametrize("seed", range(5))
def test_coerce_is_idempotent(seed):
    rng = random.Random(seed)
    targets = [Tag.NOOB, Tag.TROOF, Tag.NUMBR, Tag.NUMBAR, Tag.YARN]
    for _ in range(200):
        value = random_scalar(rng)
        target = rng.choice(targets)
        once = coerce(value, target)
        assert once.tag is target
        assert coerce(once, target) == once


@pytest.mark.parametrize("seed", range(5))
def test_displayed_numbers_cast_back_to_themselves(seed):
    rng = random.Random(seed)
    for _ in range(200):
        for number in (N(rng.randint(NUMBR_MIN, NUMBR_MAX)), random_numbar(rng)):
            assert coerce(Y(display(number)), number.tag) == number
