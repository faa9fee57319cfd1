"""
Launch one thread per PE over a shared heap and collect what they did.
"""

import logging
import threading
from dataclasses import dataclass
from typing import TextIO

from diagnostics import LolRuntimeError
from interpreter.context import PeContext
from interpreter.executor import run_pe
from parsing.ast_nodes import Program
from pgas_runtime.heap import SymmetricHeap
from pgas_runtime.sync import Coordinator, DeadlockReport, PeResult

log = logging.getLogger(__name__)


@dataclass
class RunResult:
    """Outcome of a whole run.

    Attributes
    ----------
    pes : list of PeResult
        Per-PE output lines and final status, ordered by PE id.
    output_log : list of (int, str)
        Every VISIBLE line in the order the PEs produced them.
    failure : LolRuntimeError or None
        First runtime error raised by any PE.
    deadlock : DeadlockReport or None
        Report of the detected deadlock, if any.
    """

    pes: list[PeResult]
    output_log: list[tuple[int, str]]
    failure: LolRuntimeError | None = None
    deadlock: DeadlockReport | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.deadlock is None

    @property
    def outputs(self) -> list[list[str]]:
        return [result.output for result in self.pes]


def spawn(
    program: Program,
    n_pes: int,
    seed: int = 0,
    *,
    max_barrier_wait: float = 5.0,
    jitter: float = 0.0,
    jitter_seed: int = 0,
    stdin: TextIO | None = None,
) -> RunResult:
    """Run ``program`` on ``n_pes`` concurrent processing elements.

    Parameters
    ----------
    program : Program
        Parsed program; every PE executes all of it.
    n_pes : int
        Number of PEs, at least 1.
    seed : int, optional
        Seed of the per-PE WHATEVR/WHATEVAR streams.
    max_barrier_wait : float, optional
        Seconds of global quiescence before blocked PEs report a deadlock.
    jitter : float, optional
        Upper bound in seconds of a random sleep before every statement,
        used to explore interleavings.
    jitter_seed : int, optional
        Seed of the sleep lengths, so an interleaving can be replayed.
    stdin : TextIO or None, optional
        Source for GIMMEH; defaults to ``sys.stdin``.

    Returns
    -------
    RunResult
        Per-PE output and status plus the first failure or deadlock.
    """
    if n_pes < 1:
        raise ValueError(f"n_pes must be at least 1, got {n_pes}")
    heap = SymmetricHeap(n_pes)
    coordinator = Coordinator(heap, seed, max_barrier_wait)
    results: list[PeResult | None] = [None] * n_pes

    def body(pe: int) -> None:
        ctx = PeContext(
            handle=coordinator.handles[pe],
            coordinator=coordinator,
            heap=heap,
            stdin=stdin,
            jitter=jitter,
            jitter_seed=jitter_seed,
        )
        results[pe] = run_pe(program, ctx)

    log.info("launching %d PE(s) with seed %d", n_pes, seed)
    threads = [
        threading.Thread(target=body, args=(pe,), name=f"pe-{pe}", daemon=True)
        for pe in range(n_pes)
    ]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    return RunResult(
        pes=[
            result if result is not None else PeResult(pe)
            for pe, result in enumerate(results)
        ],
        output_log=list(coordinator.output_log),
        failure=coordinator.failure,
        deadlock=coordinator.deadlock,
    )
