"""Per-PE execution state."""

import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, TextIO

from diagnostics import LolRuntimeError
from pgas_runtime.heap import Slot, SymmetricHeap
from pgas_runtime.sync import Coordinator, PeHandle


@dataclass
class PeContext:
    """Everything one PE needs to run its copy of the program.

    ``scopes`` is a stack of name tables; shared declarations put the slot
    that lives in the heap segment into the current scope, so local
    references reach it directly. ``predication`` holds the target PE of
    each active ``TXT MAH BFF``, innermost last.
    """

    handle: PeHandle
    coordinator: Coordinator
    heap: SymmetricHeap
    stdin: TextIO | None = None
    jitter: float = 0.0
    jitter_seed: int = 0
    scopes: list[dict[str, Slot]] = field(default_factory=lambda: [{}])
    predication: list[int] = field(default_factory=list)
    output: list[str] = field(default_factory=list)
    jitter_rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.jitter_rng = random.Random((self.jitter_seed << 16) | self.pe)

    @property
    def pe(self) -> int:
        return self.handle.pe

    @property
    def n_pes(self) -> int:
        return self.heap.n_pes

    def lookup(self, name: str) -> Slot | None:
        for scope in reversed(self.scopes):
            slot = scope.get(name)
            if slot is not None:
                return slot
        return None

    def declare(self, name: str, slot: Slot) -> None:
        scope = self.scopes[-1]
        if name in scope:
            raise LolRuntimeError(f"{name} is already declared in this scope")
        scope[name] = slot

    @contextmanager
    def scope(self) -> Iterator[dict[str, Slot]]:
        self.scopes.append({})
        try:
            yield self.scopes[-1]
        finally:
            self.scopes.pop()

    @contextmanager
    def predicated(self, target: int) -> Iterator[None]:
        if not 0 <= target < self.n_pes:
            raise LolRuntimeError(
                f"TXT MAH BFF target {target} is outside [0, {self.n_pes})"
            )
        self.predication.append(target)
        try:
            yield
        finally:
            self.predication.pop()

    def emit(self, line: str) -> None:
        self.output.append(line)
        self.coordinator.emit(self.pe, line)
