# core/patterns.py

"""
OPI patterns: formal polynomials in variables x1..xk whose coefficients are
sympy expressions in the parameters (lambda, b, d).

Shapes (PatternWord) mirror BracketedWord but may contain variables; they
never leak into the term layer: instantiating a shape at concrete argument
words gives a BracketedWord, and matching a shape against a word yields the
argument words.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import sympy

from core.errors import (
    ParameterConstraintError,
    PatternError,
    StabilityViolation,
    UnboundParameter,
)
from core.orders import OrderKind
from core.polynomials import OperatedPolynomial, as_fraction
from core.words import Alphabet, Bracket, BracketedWord, Generator, Prime

DEFAULT_PARAMS: Dict[str, Fraction] = {
    "lambda": Fraction(0),
    "b": Fraction(1),
    "d": Fraction(1),
}

ParamBinding = Tuple[Tuple[str, Fraction], ...]


def resolve_params(overrides: Optional[Mapping[str, object]] = None) -> Dict[str, Fraction]:
    """Defaults (lambda=0, b=1, d=1) overlaid with explicit bindings."""
    params = dict(DEFAULT_PARAMS)
    for name, value in (overrides or {}).items():
        params[name] = as_fraction(value)
    return params


# ----------------------------------------------------------------------
# Shapes
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class Var:
    name: str
    index: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PatternBracket:
    inner: "PatternWord"


ShapePrime = Union[Generator, Var, PatternBracket]


@dataclass(frozen=True)
class PatternWord:
    primes: Tuple[ShapePrime, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "primes", tuple(self.primes))
        if not self.primes:
            raise PatternError("Empty term shape")

    @cached_property
    def variables(self) -> Tuple[int, ...]:
        seen: List[int] = []
        for p in self.primes:
            if isinstance(p, Var):
                if p.index not in seen:
                    seen.append(p.index)
            elif isinstance(p, PatternBracket):
                for i in p.inner.variables:
                    if i not in seen:
                        seen.append(i)
        return tuple(seen)

    @property
    def breadth(self) -> int:
        return len(self.primes)

    def instantiate(self, args: Sequence[BracketedWord]) -> BracketedWord:
        return BracketedWord(self._instantiate_primes(args))

    def _instantiate_primes(self, args: Sequence[BracketedWord]) -> Tuple[Prime, ...]:
        out: List[Prime] = []
        for p in self.primes:
            if isinstance(p, Var):
                out.extend(args[p.index].primes)
            elif isinstance(p, PatternBracket):
                out.append(Bracket(BracketedWord(p.inner._instantiate_primes(args))))
            else:
                out.append(p)
        return tuple(out)

    def __str__(self) -> str:
        return "*".join(_render_shape_prime(p) for p in self.primes)


def _render_shape_prime(p: ShapePrime) -> str:
    if not isinstance(p, PatternBracket):
        return str(p)
    k, inner = 1, p.inner
    while len(inner.primes) == 1 and isinstance(inner.primes[0], PatternBracket):
        inner = inner.primes[0].inner
        k += 1
    head = "L" if k == 1 else f"L^{k}"
    return f"{head}({inner})"


def match_shape(shape: PatternWord, w: BracketedWord) -> Iterator[Dict[int, BracketedWord]]:
    """
    All variable assignments making `shape` equal to `w`. Every split of a
    prime run between adjacent variables is a distinct match; the first
    variable takes the shortest run first.
    """
    yield from _match_seq(shape.primes, 0, w.primes, 0, {})


def _match_seq(pp, i, wp, j, binding) -> Iterator[Dict[int, BracketedWord]]:
    if i == len(pp):
        if j == len(wp):
            yield binding
        return
    if j == len(wp):
        return
    p = pp[i]
    if isinstance(p, Var):
        bound = binding.get(p.index)
        if bound is not None:
            k = j + bound.breadth
            if wp[j:k] == bound.primes:
                yield from _match_seq(pp, i + 1, wp, k, binding)
            return
        last = len(wp) - (len(pp) - i - 1)
        for k in range(j + 1, last + 1):
            yield from _match_seq(pp, i + 1, wp, k, {**binding, p.index: BracketedWord(wp[j:k])})
    elif isinstance(p, PatternBracket):
        target = wp[j]
        if isinstance(target, Bracket):
            for inner in _match_seq(p.inner.primes, 0, target.inner.primes, 0, binding):
                yield from _match_seq(pp, i + 1, wp, j + 1, inner)
    elif wp[j] == p:
        yield from _match_seq(pp, i + 1, wp, j + 1, binding)


def match_args(shape: PatternWord, w: BracketedWord, arity: int) -> Iterator[Tuple[BracketedWord, ...]]:
    """Argument tuples for shapes that mention every variable; others yield nothing."""
    if len(shape.variables) != arity:
        return
    for binding in match_shape(shape, w):
        yield tuple(binding[i] for i in range(arity))


# ----------------------------------------------------------------------
# Patterns
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PatternTerm:
    coefficient: sympy.Expr
    shape: PatternWord


@dataclass(frozen=True)
class OPIPattern:
    id: str
    variables: Tuple[str, ...]
    body: Tuple[PatternTerm, ...]
    designated_leads: Tuple[Tuple[OrderKind, PatternWord], ...] = ()
    sound_orders: Tuple[OrderKind, ...] = ()
    nonzero_params: Tuple[str, ...] = ()
    unstable_orders: Tuple[OrderKind, ...] = ()
    classified: bool = True
    description: str = ""
    family: str = ""

    def __post_init__(self) -> None:
        if not self.body:
            raise PatternError(f"Pattern '{self.id}' has an empty body")

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def is_monomial(self) -> bool:
        return len(self.body) == 1

    @cached_property
    def parameters(self) -> Tuple[str, ...]:
        names = set()
        for term in self.body:
            names.update(str(s) for s in term.coefficient.free_symbols)
        return tuple(sorted(names))

    @cached_property
    def term_shapes(self) -> Tuple[PatternWord, ...]:
        seen: List[PatternWord] = []
        for term in self.body:
            if term.shape not in seen:
                seen.append(term.shape)
        return tuple(seen)

    def declared_lead(self, order: OrderKind) -> Optional[PatternWord]:
        for kind, shape in self.designated_leads:
            if kind == order:
                return shape
        return None

    def designated_lead(self, order: OrderKind, params: Optional[Mapping[str, object]] = None) -> PatternWord:
        """Declared shape for `order`, or the lead at fresh generators."""
        declared = self.declared_lead(OrderKind(order))
        if declared is not None:
            return declared
        return derive_lead_shape(self, order, resolve_params(params))

    def render_body(self) -> str:
        parts = []
        for i, term in enumerate(self.body):
            coeff = sympy.sympify(term.coefficient)
            shape = str(term.shape)
            if coeff == 1:
                text, sign = shape, "+"
            elif coeff == -1:
                text, sign = shape, "-"
            elif coeff.is_Number:
                sign = "-" if coeff < 0 else "+"
                text = f"{sympy.sstr(abs(coeff))}*{shape}"
            else:
                text, sign = f"({sympy.sstr(coeff)})*{shape}", "+"
            if i == 0:
                parts.append(text if sign == "+" else f"-{text}")
            else:
                parts.append(f" {sign} {text}")
        return "".join(parts)

    def with_term_negated(self, index: int, new_id: Optional[str] = None) -> "OPIPattern":
        body = list(self.body)
        body[index] = PatternTerm(-body[index].coefficient, body[index].shape)
        return replace(
            self,
            id=new_id or f"{self.id}~{index}",
            body=tuple(body),
            designated_leads=(),
            classified=False,
        )

    def plus(self, other: "OPIPattern", new_id: str) -> "OPIPattern":
        if other.variables != self.variables:
            raise PatternError("Only patterns over the same head can be added")
        merged: Dict[PatternWord, sympy.Expr] = {}
        for term in self.body + other.body:
            merged[term.shape] = sympy.expand(merged.get(term.shape, 0) + term.coefficient)
        body = tuple(PatternTerm(c, s) for s, c in merged.items() if c != 0)
        return OPIPattern(id=new_id, variables=self.variables, body=body, classified=False)

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "family": self.family,
            "head": f"{self.id}({', '.join(self.variables)})",
            "body": self.render_body(),
            "parameters": list(self.parameters),
            "nonzero": list(self.nonzero_params),
            "sound_orders": [str(o) for o in self.sound_orders],
            "designated_leads": {str(o): str(s) for o, s in self.designated_leads},
            "unstable_orders": [str(o) for o in self.unstable_orders],
            "classified": self.classified,
            "description": self.description,
        }


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------
def bind_params(pattern: OPIPattern, params: Mapping[str, object]) -> ParamBinding:
    binding = []
    for name in pattern.parameters:
        if name not in params:
            raise UnboundParameter(name, pattern.id)
        binding.append((name, as_fraction(params[name])))
    for name in pattern.nonzero_params:
        if name in params and as_fraction(params[name]) == 0:
            raise ParameterConstraintError(f"Pattern '{pattern.id}' requires {name} != 0")
    return tuple(binding)


@lru_cache(maxsize=None)
def _coefficients(body: Tuple[PatternTerm, ...], binding: ParamBinding) -> Tuple[Fraction, ...]:
    subs = {sympy.Symbol(name): sympy.Rational(v.numerator, v.denominator) for name, v in binding}
    out = []
    for term in body:
        value = sympy.sympify(term.coefficient).subs(subs)
        if not value.is_Rational:
            free = sorted(str(s) for s in value.free_symbols)
            raise UnboundParameter(free[0] if free else str(value))
        out.append(Fraction(int(value.p), int(value.q)))
    return tuple(out)


def evaluate_pattern(
    pattern: OPIPattern,
    args: Sequence[BracketedWord],
    params: Mapping[str, object],
) -> OperatedPolynomial:
    if len(args) != pattern.arity:
        raise PatternError(
            f"Pattern '{pattern.id}' has arity {pattern.arity}, got {len(args)} argument(s)"
        )
    coefficients = _coefficients(pattern.body, bind_params(pattern, params))
    return OperatedPolynomial.from_terms(
        (term.shape.instantiate(args), c) for term, c in zip(pattern.body, coefficients)
    )


def fresh_arguments(pattern: OPIPattern) -> Tuple[BracketedWord, ...]:
    alphabet = Alphabet(pattern.variables)
    return tuple(BracketedWord((g,)) for g in alphabet)


def derive_lead_shape(pattern: OPIPattern, order: OrderKind, params: Mapping[str, object]) -> PatternWord:
    args = fresh_arguments(pattern)
    lead = evaluate_pattern(pattern, args, params).leading(order).monomial
    for term in pattern.body:
        if term.shape.instantiate(args) == lead:
            return term.shape
    raise PatternError(f"Could not map the lead {lead} of '{pattern.id}' back to a term shape")


# ----------------------------------------------------------------------
# Instances
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class PatternInstance:
    """A pattern evaluated at concrete arguments, normalized to monic."""
    pattern_id: str
    args: Tuple[BracketedWord, ...]
    polynomial: OperatedPolynomial
    lead: BracketedWord

    @property
    def label(self) -> str:
        return f"{self.pattern_id}({', '.join(str(a) for a in self.args)})"

    def to_dict(self) -> Dict[str, object]:
        return {"pattern": self.pattern_id, "args": [str(a) for a in self.args]}


def instantiate(
    pattern: OPIPattern,
    args: Sequence[BracketedWord],
    order: OrderKind,
    params: Mapping[str, object],
    lead_shape: Optional[PatternWord] = None,
) -> PatternInstance:
    """
    Evaluate and check that the designated shape is the true leading
    monomial of the instance; raise StabilityViolation otherwise.
    """
    args = tuple(args)
    shape = lead_shape or pattern.designated_lead(order, params)
    poly = evaluate_pattern(pattern, args, params)
    expected = shape.instantiate(args)
    actual = poly.leading(order)
    if actual.monomial != expected:
        raise StabilityViolation(
            pattern_id=pattern.id,
            args=[str(a) for a in args],
            instance=poly.render(order),
            expected_lead=str(expected),
            actual_lead=str(actual.monomial),
            order=str(order),
        )
    return PatternInstance(
        pattern_id=pattern.id,
        args=args,
        polynomial=poly.scale(1 / actual.coefficient),
        lead=expected,
    )
