# opalg/dsl/binder.py

"""
Name resolution and evaluation of DSL expressions.

Every expression evaluates to a formal polynomial: a mapping from a tuple of
shape primes (Generator, Var, PatternBracket) to a sympy coefficient. The
empty tuple holds scalars while products are being built; a scalar that
survives to the top (or inside L) is reported, since the unit is not
available in the non-unitary setting.

Names resolve in this order: pattern variables, declared generators,
declared parameters, the default parameters (lambda, b, d; not while
inferring generators from a bare payload), then generator inference.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

import sympy

from core.errors import Diagnostic, DSLSyntaxError, OrderError, PatternError
from core.orders import OrderKind
from core.patterns import (
    DEFAULT_PARAMS,
    OPIPattern,
    PatternBracket,
    PatternTerm,
    PatternWord,
    Var,
    resolve_params,
)
from core.polynomials import OperatedPolynomial
from core.words import Alphabet, Bracket, BracketedWord, Generator
from opalg.dsl.parser import (
    DSLParser,
    ExprStmt,
    GensStmt,
    Name,
    Number,
    OpiStmt,
    Operator,
    OrderStmt,
    ParamsStmt,
    Product,
    Span,
    Sum,
    UseStmt,
)

logger = logging.getLogger("DSL")

FormalPoly = Dict[Tuple[object, ...], sympy.Expr]

UNIT_NOTE = "unit not available in the non-unitary setting"


@dataclass
class Scope:
    alphabet: Alphabet
    infer_generators: bool = False
    params: Set[str] = field(default_factory=set)
    default_params: bool = True
    variables: Dict[str, Var] = field(default_factory=dict)
    context: str = ""


@dataclass
class SourceSpec:
    """Everything a DSL source declares, bound and evaluated."""
    alphabet: Alphabet
    order: Optional[OrderKind] = None
    params: Dict[str, Fraction] = field(default_factory=dict)
    patterns: Dict[str, OPIPattern] = field(default_factory=dict)
    catalog_refs: List[str] = field(default_factory=list)
    payloads: List[OperatedPolynomial] = field(default_factory=list)
    warnings: List[Diagnostic] = field(default_factory=list)

    @property
    def pattern_list(self) -> List[OPIPattern]:
        return list(self.patterns.values())


class Binder:
    def __init__(self) -> None:
        self.diagnostics: List[Diagnostic] = []

    # ---------- diagnostics ----------

    def error(self, span: Span, message: str, note: str = "") -> None:
        self.diagnostics.append(
            Diagnostic(severity="error", line=span.line, column=span.column, length=span.length, message=message, note=note)
        )

    def warning(self, span: Span, message: str, note: str = "") -> None:
        self.diagnostics.append(
            Diagnostic(severity="warning", line=span.line, column=span.column, length=span.length, message=message, note=note)
        )

    @property
    def errors(self) -> List[Diagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    def raise_if_errors(self) -> None:
        if self.errors:
            raise DSLSyntaxError(self.errors)

    # ---------- evaluation ----------

    def evaluate(self, expr, scope: Scope) -> FormalPoly:
        if isinstance(expr, Sum):
            acc: FormalPoly = {}
            for sign, product in expr.terms:
                for shape, c in self.evaluate(product, scope).items():
                    _accumulate(acc, shape, sign * c)
            return acc
        if isinstance(expr, Product):
            acc = {(): sympy.Integer(1)}
            for factor in expr.factors:
                acc = _multiply(acc, self.evaluate(factor, scope))
            return acc
        if isinstance(expr, Number):
            return self._number(expr)
        if isinstance(expr, Name):
            return self._name(expr, scope)
        if isinstance(expr, Operator):
            return self._operator(expr, scope)
        raise TypeError(f"Unexpected AST node: {expr!r}")

    def _number(self, node: Number) -> FormalPoly:
        try:
            value = Fraction(node.text)
        except ZeroDivisionError:
            self.error(node.span, f"division by zero in coefficient {node.text}")
            return {}
        return {(): sympy.Rational(value.numerator, value.denominator)}

    def _name(self, node: Name, scope: Scope) -> FormalPoly:
        name = node.name
        if name in scope.variables:
            return {(scope.variables[name],): sympy.Integer(1)}
        if name in scope.alphabet:
            return {(scope.alphabet[name],): sympy.Integer(1)}
        if name in scope.params or (scope.default_params and name in DEFAULT_PARAMS):
            return {(): sympy.Symbol(name)}
        if scope.infer_generators:
            return {(scope.alphabet.declare(name),): sympy.Integer(1)}
        if scope.variables:
            note = f"variables of {scope.context} are {', '.join(scope.variables)}"
        else:
            note = "declare it with `gens` or bind it with `params`"
        self.error(node.span, f"unknown name '{name}'", note)
        return {}

    def _operator(self, node: Operator, scope: Scope) -> FormalPoly:
        if node.argument is None:
            self.error(node.span, f"empty bracket argument: {UNIT_NOTE}")
            return {}
        if node.power < 1:
            self.error(node.span, "L^k needs an integer exponent k >= 1")
            return {}
        out: FormalPoly = {}
        for shape, c in self.evaluate(node.argument, scope).items():
            if not shape:
                self.error(node.span, f"scalar term without monomial inside L: {UNIT_NOTE}")
                continue
            for _ in range(node.power):
                shape = (PatternBracket(PatternWord(shape)),)
            _accumulate(out, shape, c)
        return out

    def check_no_scalars(self, formal: FormalPoly, span: Span) -> FormalPoly:
        if () in formal:
            self.error(span, f"scalar term without monomial: {UNIT_NOTE}")
            formal = {s: c for s, c in formal.items() if s}
        return formal

    # ---------- conversion ----------

    def to_polynomial(self, formal: FormalPoly, values: Mapping[str, Fraction], span: Span) -> OperatedPolynomial:
        subs = {sympy.Symbol(k): sympy.Rational(v.numerator, v.denominator) for k, v in values.items()}
        terms = []
        for shape, c in formal.items():
            value = sympy.sympify(c).subs(subs)
            if not value.is_Rational:
                free = ", ".join(sorted(str(s) for s in value.free_symbols))
                self.error(span, f"unbound parameter(s) {free}")
                continue
            terms.append((shape_to_word(shape), Fraction(int(value.p), int(value.q))))
        return OperatedPolynomial.from_terms(terms)


# ----------------------------------------------------------------------
# Formal polynomial helpers
# ----------------------------------------------------------------------
def _accumulate(acc: FormalPoly, shape, c) -> None:
    total = sympy.expand(acc.get(shape, 0) + c)
    if total == 0:
        acc.pop(shape, None)
    else:
        acc[shape] = total


def _multiply(left: FormalPoly, right: FormalPoly) -> FormalPoly:
    out: FormalPoly = {}
    for s1, c1 in left.items():
        for s2, c2 in right.items():
            _accumulate(out, s1 + s2, c1 * c2)
    return out


def shape_to_word(shape: Tuple[object, ...]) -> BracketedWord:
    primes = []
    for p in shape:
        if isinstance(p, PatternBracket):
            primes.append(Bracket(shape_to_word(p.inner.primes)))
        elif isinstance(p, Generator):
            primes.append(p)
        else:
            raise PatternError(f"Pattern variable {p} in a concrete polynomial")
    return BracketedWord(tuple(primes))


def _first_span(expr) -> Span:
    if isinstance(expr, (Number, Name, Operator)):
        return expr.span
    if isinstance(expr, Sum) and expr.terms:
        return _first_span(expr.terms[0][1])
    if isinstance(expr, Product) and expr.factors:
        return _first_span(expr.factors[0])
    return Span(1, 1, 0)


# ----------------------------------------------------------------------
# Entry points
# ----------------------------------------------------------------------
def bind_program(
    source: str,
    gens: Optional[List[str]] = None,
    params: Optional[Mapping[str, object]] = None,
) -> SourceSpec:
    program = DSLParser().parse_program(source)
    binder = Binder()

    infer = gens is None and not any(isinstance(s, GensStmt) for s in program.statements)
    spec = SourceSpec(alphabet=Alphabet(gens or ()))
    for name, value in (params or {}).items():
        spec.params[name] = resolve_params({name: value})[name]
    external = set(spec.params)
    declared: Set[str] = set()

    for stmt in program.statements:
        if isinstance(stmt, GensStmt):
            for n in stmt.names:
                if n.name in spec.alphabet:
                    binder.error(n.span, f"duplicate declaration of generator '{n.name}'")
                elif n.name in spec.params:
                    binder.error(n.span, f"'{n.name}' is already bound as a parameter")
                else:
                    spec.alphabet.declare(n.name)

        elif isinstance(stmt, OrderStmt):
            if spec.order is not None:
                binder.error(stmt.name.span, "duplicate order declaration")
            try:
                spec.order = OrderKind.parse(stmt.name.name)
            except OrderError as e:
                binder.error(stmt.name.span, str(e))

        elif isinstance(stmt, ParamsStmt):
            for n, text in stmt.bindings:
                if n.name in declared:
                    binder.error(n.span, f"duplicate declaration of parameter '{n.name}'")
                    continue
                declared.add(n.name)
                if n.name in spec.alphabet:
                    binder.error(n.span, f"'{n.name}' is already declared as a generator")
                    continue
                try:
                    value = Fraction(text)
                except ZeroDivisionError:
                    binder.error(n.span, f"division by zero in the value of '{n.name}'")
                    continue
                # caller-supplied bindings win over the source
                if n.name not in external:
                    spec.params[n.name] = value

        elif isinstance(stmt, UseStmt):
            from opalg.catalog import lookup

            for ref in stmt.ids:
                try:
                    pattern = lookup(ref.name)
                except PatternError as e:
                    binder.error(ref.span, str(e))
                    continue
                if pattern.id in spec.patterns:
                    binder.error(ref.span, f"duplicate declaration of OPI '{pattern.id}'")
                    continue
                spec.patterns[pattern.id] = pattern
                spec.catalog_refs.append(pattern.id)

        elif isinstance(stmt, OpiStmt):
            pattern = _bind_opi(binder, stmt, spec)
            if pattern is not None:
                spec.patterns[pattern.id] = pattern

        elif isinstance(stmt, ExprStmt):
            scope = Scope(
                alphabet=spec.alphabet,
                infer_generators=infer,
                params=set(spec.params),
                default_params=not infer,
            )
            span = _first_span(stmt.body)
            formal = binder.check_no_scalars(binder.evaluate(stmt.body, scope), span)
            spec.payloads.append(binder.to_polynomial(formal, resolve_params(spec.params), span))

    binder.raise_if_errors()
    spec.warnings = [d for d in binder.diagnostics if d.severity == "warning"]
    logger.info(
        "bound %d generator(s), %d OPI(s), %d payload(s)",
        len(spec.alphabet),
        len(spec.patterns),
        len(spec.payloads),
    )
    return spec


def _bind_opi(binder: Binder, stmt: OpiStmt, spec: SourceSpec) -> Optional[OPIPattern]:
    pattern_id = stmt.name.name
    if pattern_id in spec.patterns:
        binder.error(stmt.name.span, f"duplicate declaration of OPI '{pattern_id}'")
        return None
    variables: Dict[str, Var] = {}
    for v in stmt.variables:
        if v.name in variables:
            binder.error(v.span, f"duplicate variable '{v.name}' in the head of '{pattern_id}'")
            continue
        variables[v.name] = Var(v.name, len(variables))

    scope = Scope(
        alphabet=spec.alphabet,
        params=set(spec.params),
        variables=variables,
        context=f"'{pattern_id}'",
    )
    formal = binder.check_no_scalars(binder.evaluate(stmt.body, scope), _first_span(stmt.body))
    if not formal:
        binder.error(stmt.name.span, f"OPI '{pattern_id}' has a zero body")
        return None

    used = {p for shape in formal for p in PatternWord(shape).variables}
    for v in stmt.variables:
        if v.name in variables and variables[v.name].index not in used:
            binder.warning(v.span, f"variable '{v.name}' does not occur in the body of '{pattern_id}'")

    return OPIPattern(
        id=pattern_id,
        variables=tuple(variables),
        body=tuple(PatternTerm(c, PatternWord(shape)) for shape, c in formal.items()),
        classified=False,
        family="user",
    )


def bind_polynomial(
    text: str,
    alphabet: Optional[Alphabet] = None,
    params: Optional[Mapping[str, object]] = None,
    infer: Optional[bool] = None,
) -> OperatedPolynomial:
    """
    Parse one polynomial. With no alphabet, generators are inferred in
    order of first appearance; pass a shared alphabet with infer=True to
    keep ranks consistent across several inputs.
    """
    if alphabet is None:
        alphabet = Alphabet()
        infer = True if infer is None else infer
    binder = Binder()
    body = DSLParser().parse_poly(text)
    explicit = {k: resolve_params({k: v})[k] for k, v in (params or {}).items()}
    scope = Scope(
        alphabet=alphabet,
        infer_generators=bool(infer),
        params=set(explicit),
        default_params=not infer,
    )
    span = _first_span(body)
    formal = binder.check_no_scalars(binder.evaluate(body, scope), span)
    poly = binder.to_polynomial(formal, resolve_params(explicit), span)
    binder.raise_if_errors()
    return poly


def bind_word(text: str, alphabet: Optional[Alphabet] = None, infer: Optional[bool] = None) -> BracketedWord:
    poly = bind_polynomial(text, alphabet=alphabet, infer=infer)
    if len(poly) != 1 or not poly.is_monic(OrderKind.DT):
        raise DSLSyntaxError(
            [Diagnostic("error", 1, 1, len(text), f"expected a single bracketed word, got {poly.render()}")]
        )
    (w,) = poly.support
    return w


def bind_pattern_body(pattern_id: str, variables: Tuple[str, ...], text: str) -> Tuple[PatternTerm, ...]:
    binder = Binder()
    body = DSLParser().parse_poly(text)
    scope = Scope(
        alphabet=Alphabet(),
        variables={name: Var(name, i) for i, name in enumerate(variables)},
        context=f"'{pattern_id}'",
    )
    formal = binder.check_no_scalars(binder.evaluate(body, scope), _first_span(body))
    binder.raise_if_errors()
    return tuple(PatternTerm(c, PatternWord(shape)) for shape, c in formal.items())


def bind_shape(variables: Tuple[str, ...], text: str) -> PatternWord:
    (term,) = bind_pattern_body("<lead>", variables, text)
    return term.shape
