"""
Render an AST back to LOLCODE source or to an indented tree dump.
"""

from dataclasses import fields, is_dataclass
from enum import Enum

import numpy as np

from core_types.values import Tag, Value
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

INDENT = "  "

_YARN_ESCAPES = {":": "::", '"': ':"', "\n": ":)", "\t": ":>", "\a": ":o"}


def format_number(number: float) -> str:
    """Shortest positional text that reads back to the same float."""
    return np.format_float_positional(number, unique=True, trim="0")


def format_literal(value: Value) -> str:
    if value.tag is Tag.NOOB:
        return "NOOB"
    if value.tag is Tag.TROOF:
        return "WIN" if value.payload else "FAIL"
    if value.tag is Tag.NUMBR:
        return str(value.payload)
    if value.tag is Tag.NUMBAR:
        return format_number(value.payload)
    escaped = "".join(_YARN_ESCAPES.get(char, char) for char in value.payload)
    return f'"{escaped}"'


def format_reference(reference: Reference) -> str:
    prefix = {Locality.UNQUALIFIED: "", Locality.MAH: "MAH ", Locality.UR: "UR "}
    if reference.name is not None:
        text = reference.name
    else:
        text = f"SRS {format_expression(reference.name_expr)}"
    if reference.index_expr is not None:
        text = f"{text}'Z {format_expression(reference.index_expr)}"
    return prefix[reference.locality] + text


def format_expression(expr: Expression) -> str:
    """Render one expression in prefix notation."""
    if isinstance(expr, Literal):
        return format_literal(expr.value)
    if isinstance(expr, Ref):
        return format_reference(expr.reference)
    if isinstance(expr, BinOp):
        lhs = format_expression(expr.lhs)
        rhs = format_expression(expr.rhs)
        return f"{expr.op.value} {lhs} AN {rhs}"
    if isinstance(expr, UnOp):
        return f"{expr.op.value} {format_expression(expr.operand)}"
    if isinstance(expr, Cast):
        return f"MAEK {format_expression(expr.operand)} A {expr.target.value}"
    if isinstance(expr, Me):
        return "ME"
    if isinstance(expr, MahFrenz):
        return "MAH FRENZ"
    if isinstance(expr, Whatevr):
        return "WHATEVR"
    if isinstance(expr, Whatevar):
        return "WHATEVAR"
    raise TypeError(f"cannot format {type(expr).__name__}")


def _declaration(stmt: Declare) -> str:
    opener = "WE HAS A" if stmt.scope is Scope.SHARED else "I HAS A"
    clauses = []
    if stmt.declared_type is not None:
        srsly = "SRSLY " if stmt.is_static else ""
        if stmt.is_array:
            clauses.append(f"ITZ {srsly}LOTZ A {stmt.declared_type.value}S")
        else:
            clauses.append(f"ITZ {srsly}A {stmt.declared_type.value}")
    if stmt.size_expr is not None:
        clauses.append(f"THAR IZ {format_expression(stmt.size_expr)}")
    if stmt.init_expr is not None:
        clauses.append(f"ITZ {format_expression(stmt.init_expr)}")
    if stmt.shared_lock:
        clauses.append("IM SHARIN IT")
    return " ".join([opener, stmt.name, " AN ".join(clauses)]).rstrip()


class _SourceWriter:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def emit(self, depth: int, text: str) -> None:
        self.lines.append(INDENT * depth + text)

    def block(self, depth: int, statements: tuple[Statement, ...]) -> None:
        for stmt in statements:
            self.statement(depth, stmt)

    def branches(self, depth: int, then, otherwise) -> None:
        self.emit(depth, "YA RLY")
        self.block(depth + 1, then)
        if otherwise is not None:
            self.emit(depth, "NO WAI")
            self.block(depth + 1, otherwise)
        self.emit(depth, "OIC")

    def statement(self, depth: int, stmt: Statement, lead: str = "") -> None:
        # ``lead`` prefixes the first emitted line (used by ``TXT MAH BFF e,``).
        def first(text: str) -> None:
            self.emit(depth, lead + text)

        if isinstance(stmt, Declare):
            first(_declaration(stmt))
        elif isinstance(stmt, Assign):
            first(f"{format_reference(stmt.target)} R {format_expression(stmt.expr)}")
        elif isinstance(stmt, Visible):
            first("VISIBLE " + " ".join(format_expression(a) for a in stmt.args))
        elif isinstance(stmt, Gimmeh):
            first(f"GIMMEH {format_reference(stmt.target)}")
        elif isinstance(stmt, CanHas):
            first(f"CAN HAS {stmt.library}?")
        elif isinstance(stmt, If):
            first(f"{format_expression(stmt.cond)}, O RLY?")
            self.branches(depth, stmt.then, stmt.otherwise)
        elif isinstance(stmt, Switch):
            first(f"{format_expression(stmt.subject)}, WTF?")
            for arm in stmt.arms:
                self.emit(depth, f"OMG {format_literal(arm.literal)}")
                self.block(depth + 1, arm.body)
            if stmt.default is not None:
                self.emit(depth, "OMGWTF")
                self.block(depth + 1, stmt.default)
            self.emit(depth, "OIC")
        elif isinstance(stmt, Loop):
            header = f"IM IN YR {stmt.label}"
            if stmt.direction is not LoopDirection.NONE:
                header += f" {stmt.direction.name} YR {stmt.var}"
                if stmt.condition is not None:
                    header += (
                        f" {stmt.condition.name} "
                        f"{format_expression(stmt.condition_expr)}"
                    )
            first(header)
            self.block(depth + 1, stmt.body)
            self.emit(depth, f"IM OUTTA YR {stmt.label}")
        elif isinstance(stmt, Break):
            first("GTFO")
        elif isinstance(stmt, Recast):
            first(f"{format_reference(stmt.target)} IS NOW A {stmt.type.value}")
        elif isinstance(stmt, Barrier):
            first("HUGZ")
        elif isinstance(stmt, LockAcquire):
            first(f"IM SRSLY MESIN WIF {format_reference(stmt.ref)}")
        elif isinstance(stmt, LockTest):
            first(f"IM MESIN WIF {format_reference(stmt.ref)}")
        elif isinstance(stmt, LockRelease):
            first(f"DUN MESIN WIF {format_reference(stmt.ref)}")
        elif isinstance(stmt, TryLockIf):
            keyword = "IM SRSLY MESIN WIF" if stmt.blocking else "IM MESIN WIF"
            first(f"{keyword} {format_reference(stmt.ref)}, O RLY?")
            self.branches(depth, stmt.then, stmt.otherwise)
        elif isinstance(stmt, Predicated):
            self.statement(
                depth,
                stmt.inner,
                lead=f"{lead}TXT MAH BFF {format_expression(stmt.pe_expr)}, ",
            )
        elif isinstance(stmt, PredicatedBlock):
            first(f"TXT MAH BFF {format_expression(stmt.pe_expr)} AN STUFF")
            self.block(depth + 1, stmt.body)
            self.emit(depth, "TTYL")
        else:
            raise TypeError(f"cannot format {type(stmt).__name__}")


def format_program(program: Program) -> str:
    """Render a program as canonical LOLCODE source.

    Parameters
    ----------
    program : Program
        Parsed program.

    Returns
    -------
    str
        Source text that parses back to an equal Program.
    """
    writer = _SourceWriter()
    header = "HAI"
    if program.version is not None:
        header += " " + format_number(program.version)
    writer.emit(0, header)
    writer.block(1, program.statements)
    writer.emit(0, "KTHXBYE")
    return "\n".join(writer.lines) + "\n"


# --- tree dump -----------------------------------------------------------


def _is_node(item: object) -> bool:
    return is_dataclass(item) and not isinstance(item, Value)


def _scalar(item: object) -> str:
    if isinstance(item, Value):
        return f"{item.tag.value} {format_literal(item)}"
    if isinstance(item, Enum):
        return item.name
    if isinstance(item, str):
        return repr(item)
    return str(item)


def _dump(node: object, depth: int, label: str, lines: list[str]) -> None:
    head = f"{label}: " if label else ""
    inline = []
    children = []
    for entry in fields(node):
        if entry.name == "span":
            continue
        item = getattr(node, entry.name)
        if item is None or item is False or item == ():
            continue
        if _is_node(item) or (
            isinstance(item, tuple) and item and _is_node(item[0])
        ):
            children.append((entry.name, item))
        else:
            inline.append(f"{entry.name}={_scalar(item)}")
    lines.append(INDENT * depth + head + " ".join([type(node).__name__] + inline))
    for name, item in children:
        if isinstance(item, tuple):
            lines.append(INDENT * (depth + 1) + f"{name}:")
            for child in item:
                _dump(child, depth + 2, "", lines)
        else:
            _dump(item, depth + 1, name, lines)


def dump_tree(program: Program) -> str:
    """Render the AST as an indented tree, two spaces per depth level.

    Field order follows the node definitions, so the output is stable
    across runs.

    Parameters
    ----------
    program : Program
        Parsed program.

    Returns
    -------
    str
        One node per line; spans are omitted.
    """
    lines: list[str] = []
    _dump(program, 0, "", lines)
    return "\n".join(lines) + "\n"
