"""
Recursive-descent parser from tokens to the AST in ``parsing.ast_nodes``.

Every operator is prefix (``OP a AN b``), so expressions need no
precedence handling: each operator keyword consumes exactly the operands
it declares. Statements are delimited by separator tokens.
"""

from core_types.arithmetic import BinaryOp, UnaryOp
from core_types.values import FAIL, NOOB, Tag, Value, WIN
from diagnostics import LolRuntimeError, ParseError, Span
from lexing.tokens import PLURAL_TYPE_KEYWORDS, TYPE_KEYWORDS, Keyword, Token, TokenKind
from parsing.ast_nodes import (
    Assign,
    BinOp,
    Barrier,
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
    SwitchArm,
    TryLockIf,
    UnOp,
    Visible,
    Whatevar,
    Whatevr,
)

BINARY_OPERATORS = {
    Keyword.SUM_OF: BinaryOp.SUM,
    Keyword.DIFF_OF: BinaryOp.DIFF,
    Keyword.PRODUKT_OF: BinaryOp.PRODUKT,
    Keyword.QUOSHUNT_OF: BinaryOp.QUOSHUNT,
    Keyword.MOD_OF: BinaryOp.MOD,
    Keyword.BOTH_SAEM: BinaryOp.BOTH_SAEM,
    Keyword.DIFFRINT: BinaryOp.DIFFRINT,
    Keyword.BIGGER: BinaryOp.BIGGER,
    Keyword.SMALLR: BinaryOp.SMALLR,
    Keyword.BOTH_OF: BinaryOp.BOTH_OF,
    Keyword.EITHER_OF: BinaryOp.EITHER_OF,
    Keyword.WON_OF: BinaryOp.WON_OF,
}

UNARY_OPERATORS = {
    Keyword.SQUAR_OF: UnaryOp.SQUAR,
    Keyword.UNSQUAR_OF: UnaryOp.UNSQUAR,
    Keyword.FLIP_OF: UnaryOp.FLIP,
    Keyword.NOT: UnaryOp.NOT,
}

NULLARY_EXPRESSIONS = {
    Keyword.ME: Me,
    Keyword.MAH_FRENZ: MahFrenz,
    Keyword.WHATEVR: Whatevr,
    Keyword.WHATEVAR: Whatevar,
}

KEYWORD_LITERALS = {
    Keyword.WIN: WIN,
    Keyword.FAIL: FAIL,
    Keyword.NOOB: NOOB,
}

_LITERAL_KINDS = (
    TokenKind.NUMBR_LITERAL,
    TokenKind.NUMBAR_LITERAL,
    TokenKind.YARN_LITERAL,
)

EXPRESSION_STARTS = (
    set(BINARY_OPERATORS)
    | set(UNARY_OPERATORS)
    | set(NULLARY_EXPRESSIONS)
    | set(KEYWORD_LITERALS)
    | {
        Keyword.MAEK,
        Keyword.SRS,
        Keyword.UR,
        Keyword.MAH,
        TokenKind.IDENTIFIER,
    }
    | set(_LITERAL_KINDS)
)

_DECLARATION_CLAUSES = {
    Keyword.ITZ,
    Keyword.ITZ_A,
    Keyword.ITZ_SRSLY_A,
    Keyword.ITZ_LOTZ_A,
    Keyword.ITZ_SRSLY_LOTZ_A,
    Keyword.THAR_IZ,
    Keyword.IM_SHARIN_IT,
}

_TAGS = {
    Keyword.NOOB: Tag.NOOB,
    Keyword.TROOF: Tag.TROOF,
    Keyword.NUMBR: Tag.NUMBR,
    Keyword.NUMBAR: Tag.NUMBAR,
    Keyword.YARN: Tag.YARN,
}


def literal_value(token: Token) -> Value:
    """Return the runtime value of a literal token."""
    try:
        if token.kind is TokenKind.NUMBR_LITERAL:
            return Value.numbr(token.value)
        if token.kind is TokenKind.NUMBAR_LITERAL:
            return Value.numbar(token.value)
    except LolRuntimeError as error:
        raise ParseError(error.message, token.span, "literal") from error
    if token.kind is TokenKind.YARN_LITERAL:
        return Value.yarn(token.value)
    return KEYWORD_LITERALS[token.kind]


class Parser:
    """Parser over one token list.

    Parameters
    ----------
    tokens : list of Token
        Output of ``lexing.lexer.tokenize``.
    """

    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.breakable_depth = 0

    # --- token helpers ---------------------------------------------------

    @property
    def current(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def peek(self, offset: int = 1) -> Token | None:
        index = self.pos + offset
        return self.tokens[index] if index < len(self.tokens) else None

    def at(self, *kinds: Keyword | TokenKind) -> bool:
        token = self.current
        return token is not None and token.kind in kinds

    def here(self) -> Span:
        if self.current is not None:
            return self.current.span
        if self.tokens:
            return self.tokens[-1].span
        return Span(1, 1)

    def advance(self) -> Token:
        token = self.current
        if token is None:
            raise ParseError("unexpected end of input", self.here())
        self.pos += 1
        return token

    def expect(self, kind: Keyword | TokenKind, construct: str) -> Token:
        token = self.current
        if token is None or token.kind is not kind:
            found = "end of input" if token is None else repr(token.text)
            expected = kind.value if isinstance(kind, Keyword) else kind.value
            raise ParseError(f"expected {expected}, found {found}", self.here(), construct)
        self.pos += 1
        return token

    def skip_separators(self) -> None:
        while self.at(TokenKind.SEPARATOR):
            self.pos += 1

    def at_separator_then(self, keyword: Keyword) -> bool:
        following = self.peek()
        return (
            self.at(TokenKind.SEPARATOR)
            and following is not None
            and following.kind is keyword
        )

    # --- program and blocks ----------------------------------------------

    def parse_program(self) -> Program:
        """Parse ``HAI [version] ... KTHXBYE``."""
        self.skip_separators()
        if not self.at(Keyword.HAI):
            raise ParseError("program must start with HAI", self.here(), "program")
        self.advance()
        version = None
        if self.at(TokenKind.NUMBAR_LITERAL, TokenKind.NUMBR_LITERAL):
            version = float(self.advance().value)
        if not self.at(TokenKind.SEPARATOR, Keyword.KTHXBYE):
            raise ParseError(
                "expected end of line after HAI", self.here(), "program"
            )
        statements = self.parse_block({Keyword.KTHXBYE}, "program", Span(1, 1))
        if not self.at(Keyword.KTHXBYE):
            raise ParseError("missing KTHXBYE", self.here(), "program")
        self.advance()
        self.skip_separators()
        if self.current is not None:
            raise ParseError(
                f"unexpected {self.current.text!r} after KTHXBYE",
                self.here(),
                "program",
            )
        return Program(version, tuple(statements))

    def parse_block(
        self, terminators: set[Keyword], construct: str, opened_at: Span
    ) -> tuple[Statement, ...]:
        statements: list[Statement] = []
        while True:
            self.skip_separators()
            token = self.current
            if token is None:
                if Keyword.KTHXBYE in terminators:
                    return tuple(statements)
                raise ParseError(
                    f"unclosed {construct} opened at {opened_at}",
                    self.here(),
                    construct,
                )
            if token.kind in terminators:
                return tuple(statements)
            if token.kind is Keyword.KTHXBYE:
                raise ParseError(
                    f"unclosed {construct} opened at {opened_at}",
                    self.here(),
                    construct,
                )
            statements.append(self.parse_statement())
            if self.current is None or self.current.kind in terminators:
                continue
            if not self.at(TokenKind.SEPARATOR):
                raise ParseError(
                    f"expected end of statement, found {self.current.text!r}",
                    self.here(),
                    construct,
                )

    # --- statements ------------------------------------------------------

    def parse_statement(self) -> Statement:
        token = self.current
        assert token is not None
        kind = token.kind
        span = token.span

        if kind is Keyword.CAN_HAS:
            self.advance()
            library = self.expect(TokenKind.IDENTIFIER, "CAN HAS")
            self.expect(Keyword.QUESTION, "CAN HAS")
            return CanHas(library.text, span=span)
        if kind is Keyword.VISIBLE:
            return self.parse_visible()
        if kind is Keyword.GIMMEH:
            self.advance()
            return Gimmeh(self.parse_reference(), span=span)
        if kind in (Keyword.I_HAS_A, Keyword.WE_HAS_A):
            return self.parse_declaration()
        if kind is Keyword.HUGZ:
            self.advance()
            return Barrier(span=span)
        if kind in (Keyword.IM_SRSLY_MESIN_WIF, Keyword.IM_MESIN_WIF):
            return self.parse_lock(kind is Keyword.IM_SRSLY_MESIN_WIF)
        if kind is Keyword.DUN_MESIN_WIF:
            self.advance()
            return LockRelease(self.parse_reference(), span=span)
        if kind is Keyword.TXT_MAH_BFF:
            return self.parse_predication()
        if kind is Keyword.IM_IN_YR:
            return self.parse_loop()
        if kind is Keyword.GTFO:
            self.advance()
            if self.breakable_depth == 0:
                raise ParseError("GTFO outside a loop or switch", span, "GTFO")
            return Break(span=span)
        if kind is Keyword.O_RLY:
            raise ParseError(
                "O RLY? needs a condition expression before it", span, "O RLY?"
            )
        if kind in EXPRESSION_STARTS:
            return self.parse_expression_statement()
        raise ParseError(f"unexpected {token.text!r}", span, "statement")

    def parse_visible(self) -> Visible:
        span = self.advance().span
        args: list[Expression] = []
        while self.current is not None and self.current.kind in EXPRESSION_STARTS:
            args.append(self.parse_expression())
        if not args:
            raise ParseError("VISIBLE needs something to print", span, "VISIBLE")
        return Visible(tuple(args), span=span)

    def parse_expression_statement(self) -> Statement:
        span = self.here()
        expr = self.parse_expression()
        if self.at(Keyword.R):
            self.advance()
            if not isinstance(expr, Ref):
                raise ParseError("can only assign to a variable", span, "assignment")
            return Assign(expr.reference, self.parse_expression(), span=span)
        if self.at(Keyword.IS_NOW_A):
            self.advance()
            if not isinstance(expr, Ref):
                raise ParseError("can only re-type a variable", span, "IS NOW A")
            return Recast(expr.reference, self.parse_type("IS NOW A"), span=span)
        if self.at_separator_then(Keyword.O_RLY):
            self.advance()
            self.advance()
            then, otherwise = self.parse_conditional_branches(span)
            return If(expr, then, otherwise, span=span)
        if self.at_separator_then(Keyword.WTF):
            self.advance()
            self.advance()
            return self.parse_switch(expr, span)
        raise ParseError(
            "an expression statement must assign (R) or be followed by "
            "O RLY? or WTF?",
            self.here(),
            "statement",
        )

    def parse_conditional_branches(
        self, span: Span
    ) -> tuple[tuple[Statement, ...], tuple[Statement, ...] | None]:
        self.skip_separators()
        then: tuple[Statement, ...] = ()
        if self.at(Keyword.YA_RLY):
            self.advance()
            then = self.parse_block({Keyword.NO_WAI, Keyword.OIC}, "O RLY?", span)
        otherwise = None
        if self.at(Keyword.NO_WAI):
            self.advance()
            otherwise = self.parse_block({Keyword.OIC}, "O RLY?", span)
        self.expect(Keyword.OIC, "O RLY?")
        return then, otherwise

    def parse_switch(self, subject: Expression, span: Span) -> Switch:
        self.breakable_depth += 1
        try:
            arms: list[SwitchArm] = []
            default = None
            self.skip_separators()
            while self.at(Keyword.OMG):
                self.advance()
                token = self.current
                if token is None or (
                    token.kind not in _LITERAL_KINDS
                    and token.kind not in KEYWORD_LITERALS
                ):
                    raise ParseError("OMG needs a literal value", self.here(), "WTF?")
                self.advance()
                body = self.parse_block(
                    {Keyword.OMG, Keyword.OMGWTF, Keyword.OIC}, "WTF?", span
                )
                arms.append(SwitchArm(literal_value(token), body))
            if self.at(Keyword.OMGWTF):
                self.advance()
                default = self.parse_block({Keyword.OIC}, "WTF?", span)
            self.expect(Keyword.OIC, "WTF?")
        finally:
            self.breakable_depth -= 1
        return Switch(subject, tuple(arms), default, span=span)

    def parse_lock(self, blocking: bool) -> Statement:
        span = self.advance().span
        ref = self.parse_reference()
        if self.at_separator_then(Keyword.O_RLY):
            self.advance()
            self.advance()
            then, otherwise = self.parse_conditional_branches(span)
            return TryLockIf(ref, then, otherwise, blocking, span=span)
        if blocking:
            return LockAcquire(ref, span=span)
        return LockTest(ref, span=span)

    def parse_predication(self) -> Statement:
        span = self.advance().span
        pe_expr = self.parse_expression()
        if self.at(Keyword.AN_STUFF):
            self.advance()
            body = self.parse_block({Keyword.TTYL}, "TXT MAH BFF block", span)
            self.expect(Keyword.TTYL, "TXT MAH BFF block")
            return PredicatedBlock(pe_expr, body, span=span)
        if self.at(TokenKind.SEPARATOR) and self.current.text == ",":
            comma = self.advance()
            if self.current is None:
                raise ParseError(
                    "missing predicated statement", self.here(), "TXT MAH BFF"
                )
            if "\n" in (comma.value or ""):
                raise ParseError(
                    "predicated statement must follow the comma on the same line",
                    comma.span,
                    "TXT MAH BFF",
                )
            return Predicated(pe_expr, self.parse_statement(), span=span)
        raise ParseError(
            "TXT MAH BFF needs ', statement' or 'AN STUFF ... TTYL'",
            self.here(),
            "TXT MAH BFF",
        )

    def parse_loop(self) -> Loop:
        span = self.advance().span
        label = self.expect(TokenKind.IDENTIFIER, "loop").text
        direction = LoopDirection.NONE
        var = None
        condition = None
        condition_expr = None
        if self.at(Keyword.UPPIN, Keyword.NERFIN):
            direction = (
                LoopDirection.UPPIN
                if self.advance().kind is Keyword.UPPIN
                else LoopDirection.NERFIN
            )
            self.expect(Keyword.YR, "loop")
            var = self.expect(TokenKind.IDENTIFIER, "loop").text
            if self.at(Keyword.TIL, Keyword.WILE):
                condition = (
                    LoopCondition.TIL
                    if self.advance().kind is Keyword.TIL
                    else LoopCondition.WILE
                )
                condition_expr = self.parse_operand("loop condition")
        self.breakable_depth += 1
        try:
            body = self.parse_block({Keyword.IM_OUTTA_YR}, f"loop {label}", span)
        finally:
            self.breakable_depth -= 1
        self.expect(Keyword.IM_OUTTA_YR, f"loop {label}")
        closing = self.expect(TokenKind.IDENTIFIER, f"loop {label}")
        if closing.text != label:
            raise ParseError(
                f"loop opened as {label!r} but closed as {closing.text!r}",
                closing.span,
                f"loop {label}",
            )
        return Loop(
            label, direction, var, condition, condition_expr, body, span=span
        )

    def parse_declaration(self) -> Declare:
        """Parse ``I HAS A`` / ``WE HAS A`` with any combination of clauses."""
        opener = self.advance()
        span = opener.span
        scope = Scope.SHARED if opener.kind is Keyword.WE_HAS_A else Scope.LOCAL
        name = self.expect(TokenKind.IDENTIFIER, "declaration").text
        construct = f"declaration of {name}"

        declared_type = None
        is_static = False
        is_array = False
        size_expr = None
        init_expr = None
        shared_lock = False
        seen: set[str] = set()

        def claim(clause: str) -> None:
            if clause in seen:
                raise ParseError(f"duplicate {clause} clause", self.here(), construct)
            seen.add(clause)

        first = True
        while True:
            if first:
                if not self.at(*_DECLARATION_CLAUSES - {Keyword.THAR_IZ, Keyword.IM_SHARIN_IT}):
                    break
            else:
                following = self.peek()
                if not (
                    self.at(Keyword.AN)
                    and following is not None
                    and following.kind in _DECLARATION_CLAUSES
                ):
                    break
                self.advance()
            first = False

            clause = self.current
            if clause.kind is Keyword.ITZ:
                claim("ITZ")
                self.advance()
                init_expr = self.parse_operand(construct)
            elif clause.kind in (Keyword.ITZ_A, Keyword.ITZ_SRSLY_A):
                claim("type")
                self.advance()
                declared_type = self.parse_type(construct)
                is_static = is_static or clause.kind is Keyword.ITZ_SRSLY_A
            elif clause.kind in (Keyword.ITZ_LOTZ_A, Keyword.ITZ_SRSLY_LOTZ_A):
                claim("type")
                self.advance()
                declared_type = self.parse_type(construct, plural=True)
                is_array = True
                is_static = is_static or clause.kind is Keyword.ITZ_SRSLY_LOTZ_A
            elif clause.kind is Keyword.THAR_IZ:
                claim("THAR IZ")
                if not is_array:
                    raise ParseError("THAR IZ without LOTZ A", clause.span, construct)
                self.advance()
                size_expr = self.parse_operand(construct)
            else:
                claim("IM SHARIN IT")
                self.advance()
                shared_lock = True

        if is_array and size_expr is None:
            raise ParseError("LOTZ A needs AN THAR IZ size", span, construct)
        if scope is Scope.SHARED:
            if declared_type is None:
                raise ParseError(
                    "WE HAS A needs a static type (ITZ SRSLY A ...)", span, construct
                )
            is_static = True
        elif shared_lock:
            raise ParseError("IM SHARIN IT only applies to WE HAS A", span, construct)
        if is_array and init_expr is not None:
            raise ParseError("arrays cannot take an ITZ initializer", span, construct)
        return Declare(
            scope,
            name,
            declared_type,
            is_static,
            is_array,
            size_expr,
            init_expr,
            shared_lock,
            span=span,
        )

    def parse_type(self, construct: str, plural: bool = False) -> Tag:
        token = self.current
        if token is not None and token.kind in TYPE_KEYWORDS:
            self.advance()
            return _TAGS[token.kind]
        if plural and token is not None and token.kind in PLURAL_TYPE_KEYWORDS:
            self.advance()
            return _TAGS[PLURAL_TYPE_KEYWORDS[token.kind]]
        raise ParseError("expected a type name", self.here(), construct)

    # --- expressions -----------------------------------------------------

    def parse_operand(self, construct: str) -> Expression:
        """Parse an operand, allowing it to start on the next physical line."""
        if self.at(TokenKind.SEPARATOR) and self.current.text == "\n":
            self.advance()
        if self.current is None or self.current.kind not in EXPRESSION_STARTS:
            raise ParseError(f"{construct} is missing an operand", self.here(), construct)
        return self.parse_expression()

    def parse_expression(self) -> Expression:
        token = self.current
        if token is None:
            raise ParseError("expected an expression", self.here(), "expression")
        kind = token.kind
        span = token.span

        if kind in _LITERAL_KINDS or kind in KEYWORD_LITERALS:
            self.advance()
            return Literal(literal_value(token), span=span)
        if kind in NULLARY_EXPRESSIONS:
            self.advance()
            return NULLARY_EXPRESSIONS[kind](span=span)
        if kind in BINARY_OPERATORS:
            self.advance()
            construct = token.text
            lhs = self.parse_operand(construct)
            if not self.at(Keyword.AN):
                raise ParseError(
                    "missing AN between operands", self.here(), construct
                )
            self.advance()
            rhs = self.parse_operand(construct)
            return BinOp(BINARY_OPERATORS[kind], lhs, rhs, span=span)
        if kind in UNARY_OPERATORS:
            self.advance()
            operand = self.parse_operand(token.text)
            return UnOp(UNARY_OPERATORS[kind], operand, span=span)
        if kind is Keyword.MAEK:
            self.advance()
            operand = self.parse_operand("MAEK")
            if self.at(Keyword.A):
                self.advance()
            return Cast(operand, self.parse_type("MAEK"), span=span)
        if kind in (Keyword.UR, Keyword.MAH, Keyword.SRS, TokenKind.IDENTIFIER):
            return Ref(self.parse_reference(), span=span)
        raise ParseError(f"expected an expression, found {token.text!r}", span, "expression")

    def parse_reference(self, indexable: bool = True) -> Reference:
        token = self.current
        span = self.here()
        locality = Locality.UNQUALIFIED
        if token is not None and token.kind is Keyword.UR:
            locality = Locality.UR
            self.advance()
        elif token is not None and token.kind is Keyword.MAH:
            locality = Locality.MAH
            self.advance()

        name = None
        name_expr = None
        if self.at(Keyword.SRS):
            self.advance()
            name_expr = self.parse_srs_operand()
        else:
            name = self.expect(TokenKind.IDENTIFIER, "reference").text

        index_expr = None
        if indexable and self.at(TokenKind.INDEX_MARKER):
            self.advance()
            index_expr = self.parse_operand("array index")
        return Reference(name, name_expr, index_expr, locality, span=span)

    def parse_srs_operand(self) -> Expression:
        """Name operand of SRS; a trailing 'Z indexes the outer reference."""
        if self.at(TokenKind.IDENTIFIER, Keyword.UR, Keyword.MAH):
            span = self.here()
            return Ref(self.parse_reference(indexable=False), span=span)
        return self.parse_operand("SRS")


def parse_program(tokens: list[Token]) -> Program:
    """Build a Program from a token list.

    Parameters
    ----------
    tokens : list of Token
        Output of ``tokenize``.

    Returns
    -------
    Program
        The parsed program.

    Raises
    ------
    ParseError
        On a missing HAI/KTHXBYE, an unclosed block or any malformed
        statement; the error names the span and the construct.
    """
    return Parser(tokens).parse_program()


def parse_source(source: str) -> Program:
    """Tokenize and parse program text in one step."""
    from lexing.lexer import tokenize

    return parse_program(tokenize(source))
