# core/orders.py

"""
Monomial orders on bracketed words.

Every order is expressed as a sort key: u < v iff key(u) < key(v) as Python
tuples. Keys are cached per word, so repeated comparisons during reduction
are cheap. Prime keys are shared by dt and qc:

    generator      -> (0, rank)
    L(w)           -> (1, key(w))

which places every generator below every bracket at prime level.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Tuple

from core.errors import OrderError
from core.words import BracketedWord, Generator, l_block_decompose


class OrderKind(str, Enum):
    DEG_LEX = "deglex"
    DT = "dt"
    O = "o"
    QC = "qc"

    @classmethod
    def parse(cls, text: str) -> "OrderKind":
        normalized = text.strip().lower().replace("-", "").replace("_", "")
        for kind in cls:
            if kind.value == normalized:
                return kind
        raise OrderError(f"Unknown order '{text}' (expected one of dt, o, qc, deglex)")

    def __str__(self) -> str:
        return self.value


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {"LESS": "LT", "EQUAL": "EQ", "GREATER": "GT"}[self.name]


# ----------------------------------------------------------------------
# Keys
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def deg_lex_key(u: BracketedWord) -> Tuple:
    if not u.is_bracket_free:
        raise OrderError(f"deg-lex is defined on bracket-free words only, got {u}")
    return (len(u.primes), tuple(g.rank for g in u.primes))


def _free_factor_key(factor: Tuple[Generator, ...]) -> Tuple:
    # Outer factors of an L-block decomposition may be empty; () sorts first.
    return (len(factor), tuple(g.rank for g in factor))


@lru_cache(maxsize=None)
def dt_key(u: BracketedWord) -> Tuple:
    return (u.z_degree, tuple(_dt_prime_key(p) for p in u.primes))


def _dt_prime_key(p) -> Tuple:
    if isinstance(p, Generator):
        return (0, p.rank)
    return (1, dt_key(p.inner))


@lru_cache(maxsize=None)
def qc_key(u: BracketedWord) -> Tuple:
    # Breadth is read descending: at equal deg_Z, fewer primes rank higher.
    return (u.z_degree, -u.breadth, tuple(_qc_prime_key(p) for p in u.primes))


def _qc_prime_key(p) -> Tuple:
    if isinstance(p, Generator):
        return (0, p.rank)
    return (1, qc_key(p.inner))


@lru_cache(maxsize=None)
def o_key(u: BracketedWord) -> Tuple:
    blocks = l_block_decompose(u)
    return (
        u.l_degree,
        blocks.r,
        tuple(o_key(arg) for arg in blocks.bracket_args),
        tuple(_free_factor_key(f) for f in blocks.outer_factors),
    )


_KEYS = {
    OrderKind.DEG_LEX: deg_lex_key,
    OrderKind.DT: dt_key,
    OrderKind.O: o_key,
    OrderKind.QC: qc_key,
}


def order_key(order: OrderKind) -> Callable[[BracketedWord], Tuple]:
    return _KEYS[OrderKind(order)]


# ----------------------------------------------------------------------
# Comparisons
# ----------------------------------------------------------------------
def _sign(a: Tuple, b: Tuple) -> Comparison:
    if a < b:
        return Comparison.LESS
    if a > b:
        return Comparison.GREATER
    return Comparison.EQUAL


def compare_deg_lex(u: BracketedWord, v: BracketedWord) -> Comparison:
    return _sign(deg_lex_key(u), deg_lex_key(v))


def compare_dt(u: BracketedWord, v: BracketedWord) -> Comparison:
    return _sign(dt_key(u), dt_key(v))


def compare_o(u: BracketedWord, v: BracketedWord) -> Comparison:
    ku, kv = o_key(u), o_key(v)
    if ku[:2] == kv[:2]:
        # equal deg_L and L-breadth: the block tuples line up one to one
        assert len(ku[2]) == len(kv[2]) and len(ku[3]) == len(kv[3])
    return _sign(ku, kv)


def compare_qc(u: BracketedWord, v: BracketedWord) -> Comparison:
    return _sign(qc_key(u), qc_key(v))


_COMPARE = {
    OrderKind.DEG_LEX: compare_deg_lex,
    OrderKind.DT: compare_dt,
    OrderKind.O: compare_o,
    OrderKind.QC: compare_qc,
}


def compare(order: OrderKind, u: BracketedWord, v: BracketedWord) -> Comparison:
    return _COMPARE[OrderKind(order)](u, v)


def leading_among(order: OrderKind, monomials: Iterable[BracketedWord]) -> BracketedWord:
    pool = list(monomials)
    if not pool:
        raise OrderError("leading_among() needs a nonempty set of monomials")
    return max(pool, key=order_key(order))


def sort_descending(order: OrderKind, monomials: Iterable[BracketedWord]):
    return sorted(monomials, key=order_key(order), reverse=True)
