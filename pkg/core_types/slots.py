"""Variable storage: scalar slots and statically typed arrays."""

from dataclasses import dataclass, field

import numpy as np

from core_types.conversions import coerce
from core_types.values import ELEMENT_DTYPES, NOOB, Tag, Value, zero_value
from diagnostics import LolRuntimeError


def conform(value: Value, static_type: Tag) -> Value:
    """Convert a value for storage in a statically typed location.

    Numbers convert between NUMBR and NUMBAR, YARNs are parsed when the
    target is numeric, and NOOB becomes the zero value. Anything else is
    refused.

    Parameters
    ----------
    value : Value
        Value being stored.
    static_type : Tag
        Declared scalar type of the location.

    Returns
    -------
    Value
        A value whose tag equals ``static_type``.

    Raises
    ------
    LolRuntimeError
        If the value cannot be stored in the location.
    """
    if value.tag is static_type:
        return value
    numeric_target = static_type in (Tag.NUMBR, Tag.NUMBAR)
    if value.tag is Tag.NOOB or (
        numeric_target and value.tag in (Tag.NUMBR, Tag.NUMBAR, Tag.YARN)
    ):
        return coerce(value, static_type)
    raise LolRuntimeError(
        f"cannot store a {value.tag.value} in a {static_type.value} variable"
    )


@dataclass
class VariableSlot:
    """A scalar variable.

    Dynamic slots (``static_type is None``) accept any scalar and retag
    freely; static slots convert on store via ``conform``.
    """

    value: Value = NOOB
    static_type: Tag | None = None
    is_shared: bool = False
    has_lock: bool = False

    def __post_init__(self) -> None:
        if self.is_shared and self.static_type is None:
            raise LolRuntimeError("shared variables must be statically typed")
        if self.static_type is not None and self.value.tag is not self.static_type:
            self.value = conform(self.value, self.static_type)

    @property
    def is_array(self) -> bool:
        return False

    def load(self) -> Value:
        return self.value

    def store(self, value: Value) -> Value:
        """Store a value, converting it for static slots, and return it."""
        if value.tag is Tag.ARRAY:
            raise LolRuntimeError("cannot store a whole array in a scalar variable")
        if self.static_type is not None:
            value = conform(value, self.static_type)
        self.value = value
        return value

    def recast(self, target: Tag) -> None:
        """Re-type the slot in place (``IS NOW A``)."""
        if self.static_type is not None and target is not self.static_type:
            raise LolRuntimeError(
                f"cannot re-type a {self.static_type.value} variable "
                f"declared SRSLY as {target.value}"
            )
        self.value = coerce(self.value, target)


@dataclass
class ArraySlot:
    """A fixed-size, homogeneous array backed by a numpy buffer."""

    element_type: Tag
    size: int
    is_shared: bool = False
    has_lock: bool = False
    cells: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.size < 0:
            raise LolRuntimeError(f"array size must not be negative, got {self.size}")
        if self.element_type not in ELEMENT_DTYPES:
            raise LolRuntimeError(
                f"arrays cannot hold {self.element_type.value} elements"
            )
        self.cells = np.full(
            self.size,
            zero_value(self.element_type).payload,
            dtype=ELEMENT_DTYPES[self.element_type],
        )

    @property
    def is_array(self) -> bool:
        return True

    @property
    def static_type(self) -> Tag:
        return Tag.ARRAY

    def check_index(self, index: int) -> None:
        if not 0 <= index < self.size:
            raise LolRuntimeError(
                f"index {index} out of bounds for array of size {self.size}"
            )

    def load_element(self, index: int) -> Value:
        self.check_index(index)
        return Value(self.element_type, self.cells.item(index))

    def store_element(self, index: int, value: Value) -> Value:
        self.check_index(index)
        value = conform(value, self.element_type)
        self.cells[index] = value.payload
        return value

    def load(self) -> Value:
        return Value.array(self.element_type, tuple(self.cells.tolist()))

    def store(self, value: Value) -> Value:
        """Replace every element from an array value of the same shape."""
        if value.tag is not Tag.ARRAY:
            raise LolRuntimeError(
                f"cannot assign a {value.tag.value} to a whole array"
            )
        if value.element_tag is not self.element_type or len(value.payload) != self.size:
            raise LolRuntimeError(
                f"whole-array assignment needs {self.size} "
                f"{self.element_type.value} elements, got {len(value.payload)} "
                f"{value.element_tag.value} elements"
            )
        self.cells[:] = value.payload
        return value
