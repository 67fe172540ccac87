# opalg/rewrite_engine/oracle.py

"""
Brute-force ideal membership: is p a rational combination of placements
q|_s of pattern instances? Solved exactly as a linear system with sympy,
independently of the rewriting code, so tests can use it as an oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from core.patterns import OPIPattern, resolve_params
from core.polynomials import OperatedPolynomial, render_coefficient
from core.words import BracketedWord, structural_key
from opalg.rewrite_engine.placements import Placement, close_placements

logger = logging.getLogger("MembershipOracle")


@dataclass(frozen=True)
class OracleBounds:
    """
    Limits for the candidate set. Degrees default to the maxima over the
    support of the polynomial being tested.
    """
    max_z_degree: Optional[int] = None
    max_l_degree: Optional[int] = None
    max_rounds: int = 8
    max_candidates: int = 2000


class MembershipStatus(str, Enum):
    IN_IDEAL = "InIdeal"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass
class MembershipResult:
    status: MembershipStatus
    witness: List[Tuple[Fraction, Placement]] = field(default_factory=list)
    n_candidates: int = 0
    n_monomials: int = 0
    complete: bool = True

    @property
    def in_ideal(self) -> bool:
        return self.status == MembershipStatus.IN_IDEAL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": str(self.status),
            "witness": [{"coefficient": render_coefficient(c), **pl.to_dict()} for c, pl in self.witness],
            "n_candidates": self.n_candidates,
            "n_monomials": self.n_monomials,
            "complete": self.complete,
        }


def ideal_membership_oracle(
    p: OperatedPolynomial,
    patterns: Sequence[OPIPattern],
    bounds: Optional[OracleBounds] = None,
    params: Optional[Mapping[str, object]] = None,
) -> MembershipResult:
    if p.is_zero:
        return MembershipResult(MembershipStatus.IN_IDEAL)

    bounds = bounds or OracleBounds()
    params = resolve_params(params)
    max_z = bounds.max_z_degree if bounds.max_z_degree is not None else max(w.z_degree for w in p.support)
    max_l = bounds.max_l_degree if bounds.max_l_degree is not None else max(w.l_degree for w in p.support)

    def within(pl: Placement) -> bool:
        return all(w.z_degree <= max_z and w.l_degree <= max_l for w in pl.polynomial.support)

    closure = close_placements(
        p.support,
        patterns,
        params,
        admit=within,
        max_rounds=bounds.max_rounds,
        max_candidates=bounds.max_candidates,
    )
    candidates = closure.placements
    rows = sorted(closure.monomials | set(p.support), key=structural_key)
    index = {w: i for i, w in enumerate(rows)}

    if not candidates:
        return MembershipResult(MembershipStatus.UNKNOWN, n_monomials=len(rows), complete=closure.complete)

    A = sympy.zeros(len(rows), len(candidates))
    for j, pl in enumerate(candidates):
        for w, c in pl.polynomial.terms.items():
            A[index[w], j] = sympy.Rational(c.numerator, c.denominator)
    b = sympy.zeros(len(rows), 1)
    for w, c in p.terms.items():
        b[index[w], 0] = sympy.Rational(c.numerator, c.denominator)

    try:
        solution, free = A.gauss_jordan_solve(b)
    except ValueError:
        logger.debug("oracle: no combination of %d candidate(s) gives %s", len(candidates), p)
        return MembershipResult(
            MembershipStatus.UNKNOWN,
            n_candidates=len(candidates),
            n_monomials=len(rows),
            complete=closure.complete,
        )

    if free.shape[0]:
        solution = solution.subs({t: 0 for t in free})
    witness = []
    for j, value in enumerate(solution):
        if value != 0:
            witness.append((Fraction(int(value.p), int(value.q)), candidates[j]))
    return MembershipResult(
        MembershipStatus.IN_IDEAL,
        witness=witness,
        n_candidates=len(candidates),
        n_monomials=len(rows),
        complete=closure.complete,
    )


def witness_sum(result: MembershipResult) -> OperatedPolynomial:
    total = OperatedPolynomial.zero()
    for c, pl in result.witness:
        total = total + pl.polynomial.scale(c)
    return total
