# opalg/gs_engine/span.py

"""
Exact triviality of a composition modulo (S, w): membership of the
composition in the span of placements q|_s whose leading monomial is
strictly below w, decided by sympy row reduction over QQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from core.orders import OrderKind, order_key
from core.patterns import OPIPattern
from core.polynomials import OperatedPolynomial
from core.words import BracketedWord
from opalg.rewrite_engine.placements import Placement, close_placements


class EchelonBasis:
    """
    Reduced row echelon form of a set of polynomials. Columns are sorted
    largest monomial first, so each pivot column is the lead of its row
    and the remainder of reduce() is the normal form modulo the span.
    """

    def __init__(self, polynomials: Sequence[OperatedPolynomial], order: OrderKind):
        self.order = OrderKind(order)
        monomials = set()
        for p in polynomials:
            monomials |= p.support
        self.columns: List[BracketedWord] = sorted(monomials, key=order_key(self.order), reverse=True)
        self.pivots: Dict[BracketedWord, Dict[int, object]] = {}
        if not self.columns:
            return

        index = {w: j for j, w in enumerate(self.columns)}
        rows = {}
        for i, p in enumerate(polynomials):
            if not p.is_zero:
                rows[i] = {index[w]: QQ(c.numerator, c.denominator) for w, c in p.terms.items()}
        m = DomainMatrix(rows, (len(polynomials), len(self.columns)), QQ)
        reduced, pivot_columns = m.rref()
        sdm = reduced.to_sdm()
        for i, j in enumerate(pivot_columns):
            self.pivots[self.columns[j]] = dict(sdm.get(i, {}))

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, p: OperatedPolynomial) -> OperatedPolynomial:
        pending = {w: QQ(c.numerator, c.denominator) for w, c in p.terms.items()}
        for lead, row in self.pivots.items():
            c = pending.get(lead)
            if not c:
                continue
            for j, a in row.items():
                w = self.columns[j]
                pending[w] = pending.get(w, QQ.zero) - c * a
        return OperatedPolynomial(
            {w: Fraction(int(v.numerator), int(v.denominator)) for w, v in pending.items() if v}
        )


@dataclass(frozen=True)
class SpanLimits:
    max_rounds: int = 8
    max_candidates: int = 4000


@dataclass
class SpanResult:
    trivial: bool
    remainder: OperatedPolynomial
    n_placements: int
    complete: bool


def span_triviality(
    composition: OperatedPolynomial,
    w: BracketedWord,
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Mapping[str, object],
    limits: Optional[SpanLimits] = None,
) -> SpanResult:
    limits = limits or SpanLimits()
    key = order_key(order)
    bound = key(w)

    def below_w(pl: Placement) -> bool:
        return key(pl.polynomial.leading(order).monomial) < bound

    closure = close_placements(
        composition.support,
        patterns,
        params,
        admit=below_w,
        max_rounds=limits.max_rounds,
        max_candidates=limits.max_candidates,
    )
    basis = EchelonBasis([pl.polynomial for pl in closure.placements], order)
    remainder = basis.reduce(composition)
    return SpanResult(
        trivial=remainder.is_zero,
        remainder=remainder,
        n_placements=len(closure.placements),
        complete=closure.complete,
    )
