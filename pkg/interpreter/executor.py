"""
Tree-walking execution of one PE's copy of the program.

Statements and expressions dispatch on their node type through lookup
tables. Every cross-PE effect goes through the heap or the coordinator.
"""

import logging
import sys
import time
from dataclasses import dataclass
from enum import Enum

from core_types.arithmetic import BinaryOp, arith, math_unary
from core_types.conversions import coerce, display, parse_numeric, truthiness
from core_types.slots import ArraySlot, VariableSlot
from core_types.values import NOOB, Tag, Value
from diagnostics import LolRuntimeError
from interpreter.context import PeContext
from parsing.ast_nodes import (
    Assign,
    Barrier,
    BinOp,
    Break,
    CanHas,
    Cast,
    Declare,
    Expression,
    Gimmeh,
    If,
    Literal,
    Locality,
    LockAcquire,
    LockTest,
    LockRelease,
    Loop,
    LoopCondition,
    LoopDirection,
    MahFrenz,
    Me,
    Predicated,
    PredicatedBlock,
    Program,
    Recast,
    Ref,
    Reference,
    Scope,
    Statement,
    Switch,
    TryLockIf,
    UnOp,
    Visible,
    Whatevar,
    Whatevr,
)
from pgas_runtime.heap import Slot
from pgas_runtime.sync import PeResult, RunAborted

log = logging.getLogger(__name__)

ONE = Value.numbr(1)


class Signal(Enum):
    """Control-flow outcome of a statement."""

    NORMAL = "normal"
    BREAK = "break"


class Mode(Enum):
    READ = "read"
    WRITE = "write"


@dataclass(frozen=True)
class Location:
    """A resolved reference: a local slot, or a shared symbol on ``target``."""

    name: str
    index: int | None = None
    slot: Slot | None = None
    target: int | None = None

    @property
    def is_remote(self) -> bool:
        return self.target is not None


# --- references ----------------------------------------------------------


def _as_int(value: Value, what: str) -> int:
    if value.tag is Tag.YARN:
        value = parse_numeric(value.payload)
    if value.tag is Tag.NUMBR:
        return value.payload
    if value.tag is Tag.NUMBAR and value.payload.is_integer():
        return int(value.payload)
    raise LolRuntimeError(f"{what} must be a NUMBR, got {value!r}")


def _name_of(ctx: PeContext, reference: Reference) -> str:
    if reference.name is not None:
        return reference.name
    return coerce(eval_expr(ctx, reference.name_expr), Tag.YARN).payload


def resolve_reference(ctx: PeContext, reference: Reference, mode: Mode) -> Location:
    """Turn a reference into a storage location.

    ``UR`` references go to the innermost predication target; ``MAH`` and
    unqualified references are local. Dynamic ``SRS`` names and index
    expressions are evaluated here.

    Parameters
    ----------
    ctx : PeContext
        Executing PE.
    reference : Reference
        Parsed reference.
    mode : Mode
        Whether the location will be read or written; only changes the
        error message for unknown names.

    Returns
    -------
    Location
        Local slot or remote ``(target, name, index)``.

    Raises
    ------
    LolRuntimeError
        For ``UR`` outside a predicated statement, ``UR`` on a non-shared
        name, an unknown name or a non-integer index.
    """
    name = _name_of(ctx, reference)
    index = None
    if reference.index_expr is not None:
        index = _as_int(eval_expr(ctx, reference.index_expr), "array index")

    if reference.locality is Locality.UR:
        if not ctx.predication:
            raise LolRuntimeError(f"UR {name} used outside TXT MAH BFF")
        if not ctx.heap.is_shared(name):
            raise LolRuntimeError(f"remote reference to non-shared variable {name}")
        return Location(name, index, target=ctx.predication[-1])

    slot = ctx.lookup(name)
    if slot is None:
        if mode is Mode.WRITE:
            raise LolRuntimeError(f"assignment to undeclared variable {name}")
        raise LolRuntimeError(f"unknown variable {name}")
    return Location(name, index, slot=slot)


def load(ctx: PeContext, location: Location) -> Value:
    if location.is_remote:
        return ctx.heap.remote_read(
            ctx.pe, location.target, location.name, location.index
        )
    slot = location.slot
    if slot.is_shared:
        return ctx.heap.read_slot(slot, location.index)
    if location.index is None:
        return slot.load()
    if not slot.is_array:
        raise LolRuntimeError(f"{location.name} is not an array")
    return slot.load_element(location.index)


def store(ctx: PeContext, location: Location, value: Value) -> Value:
    if location.is_remote:
        return ctx.heap.remote_write(
            ctx.pe, location.target, location.name, location.index, value
        )
    slot = location.slot
    if slot.is_shared:
        return ctx.heap.write_slot(slot, location.index, value)
    if location.index is None:
        return slot.store(value)
    if not slot.is_array:
        raise LolRuntimeError(f"{location.name} is not an array")
    return slot.store_element(location.index, value)


# --- expressions ---------------------------------------------------------


def _eval_ref(ctx: PeContext, expr: Ref) -> Value:
    return load(ctx, resolve_reference(ctx, expr.reference, Mode.READ))


_EXPRESSION_HANDLERS = {
    Literal: lambda ctx, expr: expr.value,
    Ref: _eval_ref,
    BinOp: lambda ctx, expr: arith(
        expr.op, eval_expr(ctx, expr.lhs), eval_expr(ctx, expr.rhs)
    ),
    UnOp: lambda ctx, expr: math_unary(expr.op, eval_expr(ctx, expr.operand)),
    Cast: lambda ctx, expr: coerce(eval_expr(ctx, expr.operand), expr.target),
    Me: lambda ctx, expr: Value.numbr(ctx.pe),
    MahFrenz: lambda ctx, expr: Value.numbr(ctx.n_pes),
    Whatevr: lambda ctx, expr: ctx.handle.rng.next_int(),
    Whatevar: lambda ctx, expr: ctx.handle.rng.next_float(),
}


def eval_expr(ctx: PeContext, expr: Expression) -> Value:
    """Evaluate an expression on the executing PE.

    Parameters
    ----------
    ctx : PeContext
        Executing PE.
    expr : Expression
        Parsed expression.

    Returns
    -------
    Value
        The result; references read through the heap when remote or shared.
    """
    return _EXPRESSION_HANDLERS[type(expr)](ctx, expr)


# --- statements ----------------------------------------------------------


def _tick(ctx: PeContext) -> None:
    if ctx.coordinator.aborted:
        raise RunAborted()
    ctx.handle.steps += 1
    if ctx.jitter:
        time.sleep(ctx.jitter_rng.random() * ctx.jitter)


def run_block(ctx: PeContext, statements: tuple[Statement, ...]) -> Signal:
    for stmt in statements:
        if exec_statement(ctx, stmt) is Signal.BREAK:
            return Signal.BREAK
    return Signal.NORMAL


def _exec_declare(ctx: PeContext, stmt: Declare) -> None:
    size = None
    if stmt.size_expr is not None:
        size = _as_int(eval_expr(ctx, stmt.size_expr), "array size")
    value = NOOB if stmt.init_expr is None else eval_expr(ctx, stmt.init_expr)

    if stmt.scope is Scope.SHARED:
        slot = ctx.heap.symmetric_declare(
            ctx.pe, stmt.name, stmt.declared_type, size, stmt.shared_lock
        )
        if stmt.init_expr is not None:
            ctx.heap.write_slot(slot, None, value)
    elif stmt.is_array:
        slot = ArraySlot(stmt.declared_type, size)
    else:
        slot = VariableSlot(static_type=stmt.declared_type if stmt.is_static else None)
        if stmt.declared_type is not None and not stmt.is_static:
            value = coerce(value, stmt.declared_type)
        slot.store(value)
    ctx.declare(stmt.name, slot)


def _exec_assign(ctx: PeContext, stmt: Assign) -> None:
    value = eval_expr(ctx, stmt.expr)
    store(ctx, resolve_reference(ctx, stmt.target, Mode.WRITE), value)


def _exec_visible(ctx: PeContext, stmt: Visible) -> None:
    ctx.emit("".join(display(eval_expr(ctx, arg)) for arg in stmt.args))


def _exec_gimmeh(ctx: PeContext, stmt: Gimmeh) -> None:
    if ctx.n_pes != 1:
        raise LolRuntimeError("interactive input is single-PE only")
    line = (ctx.stdin or sys.stdin).readline()
    if line.endswith("\n"):
        line = line[:-1]
    store(ctx, resolve_reference(ctx, stmt.target, Mode.WRITE), Value.yarn(line))


def _exec_if(ctx: PeContext, stmt: If) -> Signal:
    if truthiness(eval_expr(ctx, stmt.cond)):
        return run_block(ctx, stmt.then)
    return run_block(ctx, stmt.otherwise or ())


def _exec_switch(ctx: PeContext, stmt: Switch) -> None:
    subject = eval_expr(ctx, stmt.subject)
    bodies = [arm.body for arm in stmt.arms]
    start = next(
        (
            position
            for position, arm in enumerate(stmt.arms)
            if truthiness(arith(BinaryOp.BOTH_SAEM, subject, arm.literal))
        ),
        len(bodies),
    )
    if stmt.default is not None:
        bodies.append(stmt.default)
    # matched arm falls through to later arms until GTFO
    for body in bodies[start:]:
        if run_block(ctx, body) is Signal.BREAK:
            break


def _exec_loop(ctx: PeContext, stmt: Loop) -> None:
    step = BinaryOp.SUM if stmt.direction is LoopDirection.UPPIN else BinaryOp.DIFF
    with ctx.scope():
        counter = None
        if stmt.var is not None:
            counter = VariableSlot(Value.numbr(0))
            ctx.declare(stmt.var, counter)
        while True:
            if stmt.condition is not None:
                met = truthiness(eval_expr(ctx, stmt.condition_expr))
                if met == (stmt.condition is LoopCondition.TIL):
                    break
            _tick(ctx)
            with ctx.scope():
                signal = run_block(ctx, stmt.body)
            if signal is Signal.BREAK:
                break
            if counter is not None:
                counter.store(arith(step, counter.load(), ONE))


def _exec_recast(ctx: PeContext, stmt: Recast) -> None:
    location = resolve_reference(ctx, stmt.target, Mode.WRITE)
    if location.is_remote or location.index is not None or location.slot.is_array:
        raise LolRuntimeError("IS NOW A needs a local scalar variable")
    with ctx.heap.guard:
        location.slot.recast(stmt.type)


def _exec_lock_acquire(ctx: PeContext, stmt: LockAcquire) -> None:
    ctx.coordinator.lock_acquire(ctx.pe, _name_of(ctx, stmt.ref), stmt.span)


def _exec_lock_test(ctx: PeContext, stmt: LockTest) -> None:
    ctx.coordinator.lock_try(ctx.pe, _name_of(ctx, stmt.ref))


def _exec_lock_release(ctx: PeContext, stmt: LockRelease) -> None:
    ctx.coordinator.lock_release(ctx.pe, _name_of(ctx, stmt.ref))


def _exec_try_lock_if(ctx: PeContext, stmt: TryLockIf) -> Signal:
    name = _name_of(ctx, stmt.ref)
    if stmt.blocking:
        ctx.coordinator.lock_acquire(ctx.pe, name, stmt.span)
        taken = True
    else:
        taken = ctx.coordinator.lock_try(ctx.pe, name)
    return run_block(ctx, stmt.then if taken else stmt.otherwise or ())


def _exec_predicated(ctx: PeContext, stmt: Predicated) -> Signal:
    target = _as_int(eval_expr(ctx, stmt.pe_expr), "TXT MAH BFF target")
    with ctx.predicated(target):
        return exec_statement(ctx, stmt.inner)


def _exec_predicated_block(ctx: PeContext, stmt: PredicatedBlock) -> Signal:
    target = _as_int(eval_expr(ctx, stmt.pe_expr), "TXT MAH BFF target")
    with ctx.predicated(target):
        return run_block(ctx, stmt.body)


_STATEMENT_HANDLERS = {
    Declare: _exec_declare,
    Assign: _exec_assign,
    Visible: _exec_visible,
    Gimmeh: _exec_gimmeh,
    CanHas: lambda ctx, stmt: None,
    If: _exec_if,
    Switch: _exec_switch,
    Loop: _exec_loop,
    Break: lambda ctx, stmt: Signal.BREAK,
    Recast: _exec_recast,
    Barrier: lambda ctx, stmt: ctx.coordinator.barrier(ctx.pe, stmt.span),
    LockAcquire: _exec_lock_acquire,
    LockTest: _exec_lock_test,
    LockRelease: _exec_lock_release,
    TryLockIf: _exec_try_lock_if,
    Predicated: _exec_predicated,
    PredicatedBlock: _exec_predicated_block,
}


def exec_statement(ctx: PeContext, stmt: Statement) -> Signal:
    """Execute one statement.

    Parameters
    ----------
    ctx : PeContext
        Executing PE.
    stmt : Statement
        Parsed statement.

    Returns
    -------
    Signal
        ``BREAK`` when a GTFO is propagating to the enclosing loop or
        switch, ``NORMAL`` otherwise.

    Raises
    ------
    LolRuntimeError
        With the statement span and PE id attached.
    RunAborted
        When another PE stopped the run.
    """
    _tick(ctx)
    try:
        return _STATEMENT_HANDLERS[type(stmt)](ctx, stmt) or Signal.NORMAL
    except LolRuntimeError as error:
        raise error.attach(stmt.span, ctx.pe)


def run_pe(program: Program, ctx: PeContext) -> PeResult:
    """Run the whole program on one PE and report how it ended.

    Runtime errors mark the PE failed and abort the run; an abort caused
    by another PE leaves this PE's status as it was when it stopped.
    """
    log.info("pe %d started", ctx.pe)
    try:
        run_block(ctx, program.statements)
        assert not ctx.predication, "predication stack not empty at program end"
        ctx.coordinator.finish(ctx.pe)
    except RunAborted:
        log.debug("pe %d stopped by abort", ctx.pe)
    except LolRuntimeError as error:
        ctx.coordinator.fail(ctx.pe, error.attach(None, ctx.pe))
    except Exception as error:
        log.exception("pe %d crashed", ctx.pe)
        ctx.coordinator.fail(
            ctx.pe, LolRuntimeError(f"internal error: {error}", pe=ctx.pe)
        )
    return PeResult(ctx.pe, ctx.output, ctx.handle.status)
