"""
The symmetric heap: one segment of shared slots per PE plus the registry
that keeps every segment shaped the same.
"""

import logging
import threading
from dataclasses import dataclass

from core_types.slots import ArraySlot, VariableSlot
from core_types.values import Tag, Value, zero_value
from diagnostics import LolRuntimeError, SymmetryError

log = logging.getLogger(__name__)

Slot = VariableSlot | ArraySlot


@dataclass(frozen=True)
class SymbolInfo:
    """Shape of a shared symbol as first declared."""

    static_type: Tag
    size: int | None
    has_lock: bool
    declared_by: int

    def describe(self) -> str:
        if self.size is None:
            return self.static_type.value
        return f"{self.static_type.value}[{self.size}]"


class SymmetricHeap:
    """Shared partitions of every PE.

    All methods may be called from any PE thread. ``guard`` serialises
    access to slots, the registry and the lock table; the coordinator
    builds its condition variable on the same lock.

    Parameters
    ----------
    n_pes : int
        Number of processing elements.
    """

    def __init__(self, n_pes: int) -> None:
        if n_pes < 1:
            raise ValueError(f"n_pes must be at least 1, got {n_pes}")
        self.n_pes = n_pes
        self.guard = threading.RLock()
        self.segments: list[dict[str, Slot]] = [{} for _ in range(n_pes)]
        self.registry: dict[str, SymbolInfo] = {}
        # symbol -> holding PE, None when free
        self.lock_table: dict[str, int | None] = {}

    def symmetric_declare(
        self,
        pe: int,
        name: str,
        static_type: Tag,
        size: int | None = None,
        with_lock: bool = False,
    ) -> Slot:
        """Install a shared slot in ``pe``'s segment.

        Parameters
        ----------
        pe : int
            Declaring PE.
        name : str
            Symbol name.
        static_type : Tag
            Scalar type, or the element type when ``size`` is given.
        size : int or None, optional
            Element count for arrays.
        with_lock : bool, optional
            Create the symbol's global lock (``AN IM SHARIN IT``).

        Returns
        -------
        VariableSlot or ArraySlot
            The zero-initialised slot now living in the segment.

        Raises
        ------
        LolRuntimeError
            If ``pe`` already declared ``name``.
        SymmetryError
            If another PE declared ``name`` with a different type or size.
        """
        with self.guard:
            segment = self.segments[pe]
            if name in segment:
                raise LolRuntimeError(f"shared variable {name} is already declared")
            info = self.registry.get(name)
            if info is None:
                info = SymbolInfo(static_type, size, with_lock, pe)
                self.registry[name] = info
                log.debug("pe %d registered shared %s as %s", pe, name, info.describe())
            elif (info.static_type, info.size) != (static_type, size):
                mine = SymbolInfo(static_type, size, with_lock, pe)
                raise SymmetryError(
                    f"shared {name} declared as {mine.describe()} here but as "
                    f"{info.describe()} on pe {info.declared_by}"
                )
            if with_lock:
                self.lock_table.setdefault(name, None)

            if size is None:
                slot = VariableSlot(
                    zero_value(static_type),
                    static_type,
                    is_shared=True,
                    has_lock=with_lock,
                )
            else:
                slot = ArraySlot(static_type, size, is_shared=True, has_lock=with_lock)
            segment[name] = slot
            return slot

    def is_shared(self, name: str) -> bool:
        with self.guard:
            return name in self.registry

    def has_lock(self, name: str) -> bool:
        with self.guard:
            return name in self.lock_table

    def slot(self, target: int, name: str) -> Slot:
        """Return ``target``'s slot for a shared symbol."""
        if not 0 <= target < self.n_pes:
            raise LolRuntimeError(
                f"pe {target} is outside [0, {self.n_pes})"
            )
        with self.guard:
            if name not in self.registry:
                raise LolRuntimeError(
                    f"remote reference to non-shared variable {name}"
                )
            segment = self.segments[target]
            if name not in segment:
                raise LolRuntimeError(
                    f"shared {name} is not yet declared on pe {target}"
                )
            return segment[name]

    def read_slot(self, slot: Slot, index: int | None = None) -> Value:
        with self.guard:
            if index is None:
                return slot.load()
            if not slot.is_array:
                raise LolRuntimeError("cannot index a scalar variable")
            return slot.load_element(index)

    def write_slot(self, slot: Slot, index: int | None, value: Value) -> Value:
        with self.guard:
            if index is None:
                return slot.store(value)
            if not slot.is_array:
                raise LolRuntimeError("cannot index a scalar variable")
            return slot.store_element(index, value)

    def remote_read(
        self, caller: int, target: int, name: str, index: int | None = None
    ) -> Value:
        """Read a shared slot, or one element of it, from ``target``'s segment.

        Parameters
        ----------
        caller : int
            Reading PE; may equal ``target``.
        target : int
            PE whose segment is read.
        name : str
            Shared symbol.
        index : int or None, optional
            Element index for arrays; None reads the whole slot.

        Returns
        -------
        Value
            The stored value; a whole-array read returns an ARRAY value.

        Raises
        ------
        LolRuntimeError
            If the symbol is not shared, not yet declared on ``target``, or
            the index is out of bounds.
        """
        with self.guard:
            return self.read_slot(self.slot(target, name), index)

    def remote_write(
        self,
        caller: int,
        target: int,
        name: str,
        index: int | None,
        value: Value,
    ) -> Value:
        """Write a shared slot, or one element of it, in ``target``'s segment.

        Whole-array writes need an array value of the same size and element
        type. Returns the value as stored.
        """
        with self.guard:
            return self.write_slot(self.slot(target, name), index, value)

    def check_symmetry(self) -> None:
        """Raise SymmetryError unless every shared symbol exists on every PE."""
        with self.guard:
            for name, info in self.registry.items():
                missing = [
                    pe for pe, segment in enumerate(self.segments) if name not in segment
                ]
                if missing:
                    pes = ", ".join(str(pe) for pe in missing)
                    raise SymmetryError(
                        f"shared {name} ({info.describe()}) is not declared "
                        f"on pe {pes}"
                    )
