# opalg/dsl/parser.py

"""
Parser for the operated-polynomial DSL.

Uses Lark (LALR) to parse source text into a small AST; name resolution
happens afterwards in opalg.dsl.binder so binding errors carry spans too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from core.errors import Diagnostic, DSLSyntaxError
from opalg.dsl.grammar import GRAMMAR, TERMINAL_NAMES


# ----------------------------------------------------------------------
# AST
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Span:
    line: int
    column: int
    length: int

    @classmethod
    def of(cls, token: Token) -> "Span":
        return cls(line=token.line or 1, column=token.column or 1, length=len(str(token)))


@dataclass
class Number:
    text: str
    span: Span


@dataclass
class Name:
    name: str
    span: Span


@dataclass
class Operator:
    power: int
    argument: Optional["Sum"]  # None for `L()`
    span: Span


@dataclass
class Product:
    factors: List["Expr"]


@dataclass
class Sum:
    terms: List[Tuple[int, Product]]


Expr = Union[Number, Name, Operator, Sum]


@dataclass
class GensStmt:
    names: List[Name]


@dataclass
class OrderStmt:
    name: Name


@dataclass
class ParamsStmt:
    bindings: List[Tuple[Name, str]]


@dataclass
class UseStmt:
    ids: List[Name]


@dataclass
class OpiStmt:
    name: Name
    variables: List[Name]
    body: Sum


@dataclass
class ExprStmt:
    body: Sum


Statement = Union[GensStmt, OrderStmt, ParamsStmt, UseStmt, OpiStmt, ExprStmt]


@dataclass
class Program:
    statements: List[Statement] = field(default_factory=list)


# ----------------------------------------------------------------------
# Tree -> AST
# ----------------------------------------------------------------------
def _name(token: Token) -> Name:
    return Name(str(token), Span.of(token))


def _power(token: Token) -> int:
    # 0 marks a non-integer exponent; the binder reports it
    text = str(token)
    return 0 if "/" in text else int(text)


class AstBuilder(Transformer):
    """Transforms the Lark parse tree into AST nodes."""

    def program(self, items) -> Program:
        return Program(statements=list(items))

    def poly_only(self, items) -> Sum:
        return items[0]

    # ---------- statements ----------

    def gens_stmt(self, items) -> GensStmt:
        return GensStmt([_name(t) for t in items])

    def order_stmt(self, items) -> OrderStmt:
        return OrderStmt(_name(items[0]))

    def params_stmt(self, items) -> ParamsStmt:
        return ParamsStmt(list(items))

    def binding(self, items) -> Tuple[Name, str]:
        name, *rest = items
        text = "".join(str(t) for t in rest)
        return _name(name), text

    def use_stmt(self, items) -> UseStmt:
        # ESCAPED_STRING keeps its quotes; the span still points at the literal
        return UseStmt([Name(str(t)[1:-1], Span.of(t)) for t in items])

    def opi_stmt(self, items) -> OpiStmt:
        name, *variables, body = items
        return OpiStmt(_name(name), [_name(v) for v in variables], body)

    def expr_stmt(self, items) -> ExprStmt:
        return ExprStmt(items[0])

    # ---------- expressions ----------

    def poly(self, items) -> Sum:
        terms: List[Tuple[int, Product]] = []
        sign = 1
        for item in items:
            if isinstance(item, Token) and item.type == "SIGN":
                sign = -1 if str(item) == "-" else 1
                continue
            terms.append((sign, item))
            sign = 1
        return Sum(terms)

    def term(self, items) -> Product:
        return Product(list(items))

    def number(self, items) -> Number:
        return Number(str(items[0]), Span.of(items[0]))

    def name(self, items) -> Name:
        return _name(items[0])

    def operator(self, items) -> Operator:
        op = items[0]
        power = _power(items[1]) if len(items) == 3 else 1
        return Operator(power=power, argument=items[-1], span=Span.of(op))

    def empty_operator(self, items) -> Operator:
        power = _power(items[1]) if len(items) == 2 else 1
        return Operator(power=power, argument=None, span=Span.of(items[0]))

    def group(self, items) -> Sum:
        return items[0]


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------
@lru_cache(maxsize=1)
def _lark() -> Lark:
    return Lark(
        GRAMMAR,
        start=["program", "poly_only"],
        parser="lalr",
        propagate_positions=True,
    )


def _describe_expected(expected) -> str:
    names = sorted({TERMINAL_NAMES.get(e, repr(e)) for e in expected or ()})
    return ", ".join(names[:6])


def _position_at_end(source: str) -> Tuple[int, int]:
    lines = source.split("\n")
    return len(lines), len(lines[-1]) + 1


def syntax_diagnostic(error: UnexpectedInput, source: str) -> Diagnostic:
    """Map a Lark error to a Diagnostic with a 1-based span."""
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if line is None or line < 1:
        line, column = _position_at_end(source)

    if isinstance(error, UnexpectedCharacters):
        message = f"unexpected character {error.char!r}"
        length = 1
    elif isinstance(error, UnexpectedEOF):
        message = "unexpected end of input"
        length = 0
    elif isinstance(error, UnexpectedToken):
        token = error.token
        if token.type == "$END":
            message = "unexpected end of input"
            length = 0
        else:
            message = f"unexpected {str(token)!r}"
            length = len(str(token))
    else:
        message = "syntax error"
        length = 1

    expected = getattr(error, "expected", None) or getattr(error, "allowed", None)
    note = f"expected {_describe_expected(expected)}" if expected else ""
    return Diagnostic(severity="error", line=line, column=column, length=length, message=message, note=note)


class DSLParser:
    """Text -> AST. Raises DSLSyntaxError carrying one Diagnostic."""

    def parse_program(self, source: str) -> Program:
        return self._parse(source, "program")

    def parse_poly(self, source: str) -> Sum:
        return self._parse(source, "poly_only")

    def _parse(self, source: str, start: str):
        try:
            tree = _lark().parse(source, start=start)
        except UnexpectedInput as e:
            raise DSLSyntaxError([syntax_diagnostic(e, source)]) from e
        return AstBuilder().transform(tree)
