# core/polynomials.py

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple, Union

from core.errors import OrderError
from core.orders import OrderKind, order_key
from core.words import BracketedWord, StarWord, bracket, concat, substitute

Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Exact conversion from int / Fraction / 'p/q' strings / sympy rationals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    p, q = getattr(value, "p", None), getattr(value, "q", None)
    if p is not None and q is not None:
        return Fraction(int(p), int(q))
    raise TypeError(f"Not an exact rational: {value!r}")


def render_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class LeadingData:
    monomial: BracketedWord
    coefficient: Fraction

    @property
    def is_monic(self) -> bool:
        return self.coefficient == 1


@dataclass(frozen=True, eq=False)
class OperatedPolynomial:
    """
    Finite linear combination of bracketed words with nonzero rational
    coefficients. The zero polynomial has no terms.
    """
    terms: Mapping[BracketedWord, Fraction]

    def __post_init__(self) -> None:
        clean: Dict[BracketedWord, Fraction] = {}
        for w, c in dict(self.terms).items():
            c = as_fraction(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", MappingProxyType(clean))

    # ---------- constructors ----------

    @classmethod
    def zero(cls) -> "OperatedPolynomial":
        return cls({})

    @classmethod
    def monomial(cls, u: BracketedWord, coefficient: Scalar = 1) -> "OperatedPolynomial":
        return cls({u: as_fraction(coefficient)})

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[BracketedWord, Scalar]]) -> "OperatedPolynomial":
        acc: Dict[BracketedWord, Fraction] = {}
        for w, c in pairs:
            acc[w] = acc.get(w, Fraction(0)) + as_fraction(c)
        return cls(acc)

    # ---------- container protocol ----------

    @cached_property
    def _hash(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OperatedPolynomial):
            return dict(self.terms) == dict(other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[BracketedWord, Fraction]]:
        return iter(self.terms.items())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> FrozenSet[BracketedWord]:
        return frozenset(self.terms)

    def coefficient(self, u: BracketedWord) -> Fraction:
        return self.terms.get(u, Fraction(0))

    # ---------- linear structure ----------

    def __add__(self, other: "OperatedPolynomial") -> "OperatedPolynomial":
        if not isinstance(other, OperatedPolynomial):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return OperatedPolynomial(acc)

    def __neg__(self) -> "OperatedPolynomial":
        return OperatedPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "OperatedPolynomial") -> "OperatedPolynomial":
        if not isinstance(other, OperatedPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "OperatedPolynomial":
        c = as_fraction(c)
        if not c:
            return OperatedPolynomial.zero()
        return OperatedPolynomial({w: c * a for w, a in self.terms.items()})

    def __mul__(self, other) -> "OperatedPolynomial":
        if isinstance(other, OperatedPolynomial):
            return multiply(self, other)
        if isinstance(other, BracketedWord):
            return OperatedPolynomial({concat(w, other): c for w, c in self.terms.items()})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "OperatedPolynomial":
        if isinstance(other, BracketedWord):
            return OperatedPolynomial({concat(other, w): c for w, c in self.terms.items()})
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # ---------- operator and contexts ----------

    def apply_L(self) -> "OperatedPolynomial":
        return OperatedPolynomial({bracket(w): c for w, c in self.terms.items()})

    def placed(self, q: StarWord) -> "OperatedPolynomial":
        """q|_s extended linearly over the terms of s."""
        if q.is_identity:
            return self
        return OperatedPolynomial.from_terms((substitute(q, w), c) for w, c in self.terms.items())

    # ---------- leading data ----------

    def leading(self, order: OrderKind) -> LeadingData:
        if not self.terms:
            raise OrderError("The zero polynomial has no leading monomial")
        lead = max(self.terms, key=order_key(order))
        return LeadingData(monomial=lead, coefficient=self.terms[lead])

    def is_monic(self, order: OrderKind) -> bool:
        return self.leading(order).is_monic

    def monic(self, order: OrderKind) -> "OperatedPolynomial":
        return self.scale(1 / self.leading(order).coefficient)

    # ---------- rendering ----------

    def ordered_terms(self, order: Optional[OrderKind] = None):
        key = order_key(order or OrderKind.DT)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def render(self, order: Optional[OrderKind] = None) -> str:
        """
        Terms descending by `order`; with no order active, descending by
        ≤_dt, which is total on every word and serves as the structural order.
        """
        if not self.terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.ordered_terms(order)):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = str(w) if mag == 1 else f"{render_coefficient(mag)}*{w}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"OperatedPolynomial({self.render()})"

    def to_dict(self) -> Dict[str, str]:
        return {str(w): render_coefficient(c) for w, c in self.ordered_terms()}


# ----------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------
def add(p: OperatedPolynomial, q: OperatedPolynomial) -> OperatedPolynomial:
    return p + q


def scale(c: Scalar, p: OperatedPolynomial) -> OperatedPolynomial:
    return p.scale(c)


def negate(p: OperatedPolynomial) -> OperatedPolynomial:
    return -p


def multiply(p: OperatedPolynomial, q: OperatedPolynomial) -> OperatedPolynomial:
    acc: Dict[BracketedWord, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = concat(u, v)
            acc[w] = acc.get(w, Fraction(0)) + a * b
    return OperatedPolynomial(acc)


def apply_L(p: OperatedPolynomial) -> OperatedPolynomial:
    return p.apply_L()


def leading(p: OperatedPolynomial, order: OrderKind) -> LeadingData:
    return p.leading(order)
