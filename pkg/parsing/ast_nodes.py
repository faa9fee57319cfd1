"""Abstract syntax tree node types.

Spans are excluded from equality so two trees parsed from differently
formatted sources compare equal when their structure matches.
"""

from dataclasses import dataclass, field
from enum import Enum

from core_types.arithmetic import BinaryOp, UnaryOp
from core_types.values import Tag, Value
from diagnostics import Span

NO_SPAN = Span(0, 0)


class Locality(Enum):
    UNQUALIFIED = "unqualified"
    MAH = "mah"
    UR = "ur"


class Scope(Enum):
    LOCAL = "local"
    SHARED = "shared"


class LoopDirection(Enum):
    UPPIN = "uppin"
    NERFIN = "nerfin"
    NONE = "none"


class LoopCondition(Enum):
    TIL = "til"
    WILE = "wile"


# --- expressions ---------------------------------------------------------


@dataclass(frozen=True)
class Expression:
    span: Span = field(default=NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True)
class Literal(Expression):
    value: Value


@dataclass(frozen=True)
class Reference:
    """A variable or array element, possibly remote or dynamically named.

    Exactly one of ``name`` and ``name_expr`` is set; ``name_expr`` comes
    from ``SRS`` and is evaluated to a YARN at run time.
    """

    name: str | None
    name_expr: Expression | None = None
    index_expr: Expression | None = None
    locality: Locality = Locality.UNQUALIFIED
    span: Span = field(default=NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True)
class Ref(Expression):
    reference: Reference


@dataclass(frozen=True)
class BinOp(Expression):
    op: BinaryOp
    lhs: Expression
    rhs: Expression


@dataclass(frozen=True)
class UnOp(Expression):
    op: UnaryOp
    operand: Expression


@dataclass(frozen=True)
class Cast(Expression):
    """``MAEK expr A type``."""

    operand: Expression
    target: Tag


@dataclass(frozen=True)
class Me(Expression):
    pass


@dataclass(frozen=True)
class MahFrenz(Expression):
    pass


@dataclass(frozen=True)
class Whatevr(Expression):
    pass


@dataclass(frozen=True)
class Whatevar(Expression):
    pass


# --- statements ----------------------------------------------------------


@dataclass(frozen=True)
class Statement:
    span: Span = field(default=NO_SPAN, compare=False, kw_only=True)


@dataclass(frozen=True)
class Declare(Statement):
    scope: Scope
    name: str
    declared_type: Tag | None = None
    is_static: bool = False
    is_array: bool = False
    size_expr: Expression | None = None
    init_expr: Expression | None = None
    shared_lock: bool = False


@dataclass(frozen=True)
class Assign(Statement):
    target: Reference
    expr: Expression


@dataclass(frozen=True)
class Visible(Statement):
    args: tuple[Expression, ...]


@dataclass(frozen=True)
class Gimmeh(Statement):
    target: Reference


@dataclass(frozen=True)
class CanHas(Statement):
    library: str


@dataclass(frozen=True)
class If(Statement):
    cond: Expression
    then: tuple[Statement, ...]
    otherwise: tuple[Statement, ...] | None = None


@dataclass(frozen=True)
class SwitchArm:
    literal: Value
    body: tuple[Statement, ...]


@dataclass(frozen=True)
class Switch(Statement):
    subject: Expression
    arms: tuple[SwitchArm, ...]
    default: tuple[Statement, ...] | None = None


@dataclass(frozen=True)
class Loop(Statement):
    label: str
    direction: LoopDirection = LoopDirection.NONE
    var: str | None = None
    condition: LoopCondition | None = None
    condition_expr: Expression | None = None
    body: tuple[Statement, ...] = ()


@dataclass(frozen=True)
class Break(Statement):
    pass


@dataclass(frozen=True)
class Recast(Statement):
    """``ref IS NOW A type``."""

    target: Reference
    type: Tag


@dataclass(frozen=True)
class Barrier(Statement):
    pass


@dataclass(frozen=True)
class LockAcquire(Statement):
    ref: Reference


@dataclass(frozen=True)
class LockTest(Statement):
    """Bare ``IM MESIN WIF``: takes the lock if it is free, never waits."""

    ref: Reference


@dataclass(frozen=True)
class LockRelease(Statement):
    ref: Reference


@dataclass(frozen=True)
class TryLockIf(Statement):
    """Lock test followed by ``O RLY?``.

    With ``blocking`` the lock is acquired unconditionally and the YA RLY
    branch always runs; otherwise a non-blocking test picks the branch.
    """

    ref: Reference
    then: tuple[Statement, ...]
    otherwise: tuple[Statement, ...] | None = None
    blocking: bool = False


@dataclass(frozen=True)
class Predicated(Statement):
    pe_expr: Expression
    inner: Statement


@dataclass(frozen=True)
class PredicatedBlock(Statement):
    pe_expr: Expression
    body: tuple[Statement, ...]


@dataclass(frozen=True)
class Program:
    version: float | None
    statements: tuple[Statement, ...]
