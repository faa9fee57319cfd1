"""
Cross-PE coordination: barriers, global locks, output collection, run abort
and deadlock detection.
"""

import logging
import threading
import time
from dataclasses import dataclass, field
from enum import Enum

from diagnostics import LolRuntimeError, Span
from pgas_runtime.heap import SymmetricHeap
from pgas_runtime.rng import PeRandom

log = logging.getLogger(__name__)

# Seconds between wake-ups of a blocked PE when nothing notifies it.
POLL_INTERVAL = 0.05


class PeStatus(Enum):
    RUNNING = "running"
    BLOCKED_ON_BARRIER = "blocked-on-barrier"
    BLOCKED_ON_LOCK = "blocked-on-lock"
    FINISHED = "finished"
    FAILED = "failed"


DONE = (PeStatus.FINISHED, PeStatus.FAILED)


@dataclass
class PeHandle:
    """Runtime identity and scheduling state of one PE."""

    pe: int
    rng: PeRandom
    status: PeStatus = PeStatus.RUNNING
    site: Span | None = None
    waiting_for: str | None = None
    steps: int = 0


@dataclass
class PeResult:
    """Output lines and final status of one PE."""

    pe: int
    output: list[str] = field(default_factory=list)
    status: PeStatus = PeStatus.RUNNING


@dataclass(frozen=True)
class PeState:
    pe: int
    status: PeStatus
    site: Span | None = None
    detail: str = ""

    def __str__(self) -> str:
        text = f"pe {self.pe}: {self.status.value}"
        if self.site is not None:
            text += f" at {self.site}"
        if self.detail:
            text += f" ({self.detail})"
        return text


@dataclass(frozen=True)
class DeadlockReport:
    """Every PE's status and blocking site at the moment a deadlock was found."""

    reason: str
    states: tuple[PeState, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        lines = [f"deadlock: {self.reason}"]
        lines.extend(f"  {state}" for state in self.states)
        return "\n".join(lines)


class RunAborted(Exception):
    """Raised inside a PE when the run was stopped by another PE."""


class Coordinator:
    """Shared scheduling state of one run.

    Every operation locks the heap's guard through ``cond``, so barrier
    arrivals, lock ownership and PE statuses change atomically with respect
    to each other and to deadlock detection.

    Parameters
    ----------
    heap : SymmetricHeap
        Heap of the run; its lock table backs the global locks.
    seed : int
        Run seed for the per-PE random streams.
    max_barrier_wait : float, optional
        Seconds of global quiescence after which blocked PEs give up.
    """

    def __init__(
        self, heap: SymmetricHeap, seed: int = 0, max_barrier_wait: float = 5.0
    ) -> None:
        self.heap = heap
        self.n_pes = heap.n_pes
        self.max_barrier_wait = max_barrier_wait
        self.cond = threading.Condition(heap.guard)
        self.handles = [PeHandle(pe, PeRandom(seed, pe)) for pe in range(self.n_pes)]
        self.arrived = 0
        self.generation = 0
        self.aborted = False
        self.failure: LolRuntimeError | None = None
        self.deadlock: DeadlockReport | None = None
        self.output_log: list[tuple[int, str]] = []
        self.progress = 0

    # --- output ----------------------------------------------------------

    def emit(self, pe: int, line: str) -> None:
        with self.cond:
            self.output_log.append((pe, line))

    # --- run state -------------------------------------------------------

    def finish(self, pe: int) -> None:
        with self.cond:
            self.handles[pe].status = PeStatus.FINISHED
            self.handles[pe].site = None
            self.progress += 1
            log.info("pe %d finished", pe)
            self.cond.notify_all()

    def fail(self, pe: int, error: LolRuntimeError) -> None:
        """Mark ``pe`` failed and abort the run unless it was already aborted."""
        with self.cond:
            self.handles[pe].status = PeStatus.FAILED
            if not self.aborted:
                self.failure = error
                self.aborted = True
                log.warning("pe %d failed, aborting run: %s", pe, error.message)
            self.cond.notify_all()

    def check_abort(self) -> None:
        if self.aborted:
            raise RunAborted()

    def detect_deadlock(self) -> DeadlockReport | None:
        """Return a report when no live PE can ever make progress.

        A live PE can progress if it is running, or waiting on a lock that
        is currently free. Barrier waiters are always stuck: the PE that
        completes a generation releases every waiter before anyone looks.
        Must be called with ``cond`` held.
        """
        live = [handle for handle in self.handles if handle.status not in DONE]
        if not live:
            return None
        for handle in live:
            if handle.status is PeStatus.RUNNING:
                return None
            if (
                handle.status is PeStatus.BLOCKED_ON_LOCK
                and self.heap.lock_table.get(handle.waiting_for) is None
            ):
                return None
        if any(handle.status is PeStatus.BLOCKED_ON_LOCK for handle in live):
            reason = "every live PE is blocked and the locks they wait for are held"
        else:
            reason = "barrier can never complete"
        return DeadlockReport(reason, self.snapshot())

    def snapshot(self) -> tuple[PeState, ...]:
        states = []
        for handle in self.handles:
            detail = ""
            if handle.status is PeStatus.BLOCKED_ON_LOCK:
                holder = self.heap.lock_table.get(handle.waiting_for)
                detail = f"waiting for lock {handle.waiting_for}, held by pe {holder}"
            elif handle.status is PeStatus.BLOCKED_ON_BARRIER:
                detail = f"{self.arrived} of {self.n_pes} arrived"
            states.append(PeState(handle.pe, handle.status, handle.site, detail))
        return tuple(states)

    def _declare_deadlock(self, report: DeadlockReport) -> None:
        self.deadlock = report
        self.aborted = True
        log.warning("%s", report)
        self.cond.notify_all()

    def _block(self, handle: PeHandle, status: PeStatus, site: Span | None) -> None:
        handle.status = status
        handle.site = site
        self.progress += 1

    def _wait(self, ready) -> None:
        """Wait on ``cond`` until ``ready()`` holds, the run aborts or it deadlocks."""
        last_total = None
        quiet_since = time.monotonic()
        while not ready():
            if self.aborted:
                raise RunAborted()
            report = self.detect_deadlock()
            if report is not None:
                self._declare_deadlock(report)
                raise RunAborted()
            total = self.progress + sum(handle.steps for handle in self.handles)
            now = time.monotonic()
            if total != last_total:
                last_total, quiet_since = total, now
            elif now - quiet_since >= self.max_barrier_wait:
                self._declare_deadlock(
                    DeadlockReport(
                        f"no progress for {self.max_barrier_wait:g}s",
                        self.snapshot(),
                    )
                )
                raise RunAborted()
            self.cond.wait(POLL_INTERVAL)

    # --- barrier ---------------------------------------------------------

    def barrier(self, pe: int, site: Span | None = None) -> None:
        """Block until every PE has entered the current barrier generation.

        The last arriving PE checks heap symmetry, starts the next
        generation and releases the others.

        Raises
        ------
        SymmetryError
            If a shared symbol is missing on some PE when the generation
            completes.
        RunAborted
            If the run is aborted or deadlocks while waiting.
        """
        with self.cond:
            self.check_abort()
            handle = self.handles[pe]
            if self.arrived + 1 == self.n_pes:
                self.heap.check_symmetry()
                self.arrived = 0
                self.generation += 1
                self.progress += 1
                for other in self.handles:
                    if other.status is PeStatus.BLOCKED_ON_BARRIER:
                        other.status = PeStatus.RUNNING
                        other.site = None
                log.debug("barrier generation %d complete", self.generation)
                self.cond.notify_all()
                return
            generation = self.generation
            self.arrived += 1
            self._block(handle, PeStatus.BLOCKED_ON_BARRIER, site)
            self.cond.notify_all()
            self._wait(lambda: self.generation != generation)

    # --- locks -----------------------------------------------------------

    def _require_lock(self, name: str) -> None:
        if name not in self.heap.lock_table:
            raise LolRuntimeError(f"{name} has no lock (declare it AN IM SHARIN IT)")

    def lock_acquire(self, pe: int, name: str, site: Span | None = None) -> None:
        """Take the global lock of ``name``, blocking while another PE holds it."""
        with self.cond:
            self.check_abort()
            self._require_lock(name)
            table = self.heap.lock_table
            if table[name] == pe:
                raise LolRuntimeError(f"lock {name} is already held by this PE")
            if table[name] is not None:
                log.debug("pe %d waits for lock %s held by pe %d", pe, name, table[name])
                handle = self.handles[pe]
                self._block(handle, PeStatus.BLOCKED_ON_LOCK, site)
                handle.waiting_for = name
                self.cond.notify_all()
                self._wait(lambda: table[name] is None)
                handle.status = PeStatus.RUNNING
                handle.site = None
                handle.waiting_for = None
            table[name] = pe
            self.progress += 1

    def lock_try(self, pe: int, name: str) -> bool:
        """Take the lock of ``name`` if it is free; never blocks."""
        with self.cond:
            self.check_abort()
            self._require_lock(name)
            table = self.heap.lock_table
            if table[name] == pe:
                raise LolRuntimeError(f"lock {name} is already held by this PE")
            if table[name] is not None:
                return False
            table[name] = pe
            self.progress += 1
            return True

    def lock_release(self, pe: int, name: str) -> None:
        with self.cond:
            self._require_lock(name)
            holder = self.heap.lock_table[name]
            if holder != pe:
                owner = "nobody" if holder is None else f"pe {holder}"
                raise LolRuntimeError(
                    f"cannot release lock {name}: it is held by {owner}"
                )
            self.heap.lock_table[name] = None
            self.progress += 1
            self.cond.notify_all()
