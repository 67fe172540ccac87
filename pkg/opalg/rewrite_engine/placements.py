# opalg/rewrite_engine/placements.py

"""
Placements q|_s of pattern instances inside monomials.

A placement is found by matching ANY term shape of a pattern (not only its
lead) against a subword occurrence, so that closing a set of monomials under
placements reaches every instance that can interact with them. Used by the
membership oracle and by the exact triviality check of the GS checker.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Set, Tuple

from core.patterns import OPIPattern, evaluate_pattern, match_args
from core.polynomials import OperatedPolynomial
from core.words import BracketedWord, StarWord, iter_occurrences, structural_key

logger = logging.getLogger("Placements")


@dataclass(frozen=True)
class Placement:
    pattern_id: str
    args: Tuple[BracketedWord, ...]
    context: StarWord
    polynomial: OperatedPolynomial

    @property
    def key(self) -> Tuple:
        return (self.pattern_id, self.args, self.context)

    @property
    def label(self) -> str:
        inner = f"{self.pattern_id}({', '.join(str(a) for a in self.args)})"
        return inner if self.context.is_identity else f"{self.context} | {inner}"

    def to_dict(self) -> Dict[str, object]:
        return {
            "pattern": self.pattern_id,
            "args": [str(a) for a in self.args],
            "context": str(self.context),
            "polynomial": self.polynomial.render(),
        }


def placements_at(
    w: BracketedWord,
    patterns: Sequence[OPIPattern],
    params: Mapping[str, object],
) -> Iterator[Placement]:
    """Every placement with some term of q|_s equal to w."""
    for occ in iter_occurrences(w):
        sub = occ.subword(w)
        q = None
        for pattern in patterns:
            for shape in pattern.term_shapes:
                if shape.breadth != sub.breadth:
                    continue
                for args in match_args(shape, sub, pattern.arity):
                    poly = evaluate_pattern(pattern, args, params)
                    if poly.is_zero:
                        continue
                    q = q or occ.context(w)
                    yield Placement(pattern.id, args, q, poly.placed(q))


@dataclass
class Closure:
    placements: List[Placement]
    monomials: Set[BracketedWord]
    complete: bool
    rounds: int


def close_placements(
    seeds: Iterable[BracketedWord],
    patterns: Sequence[OPIPattern],
    params: Mapping[str, object],
    admit: Callable[[Placement], bool],
    max_rounds: int = 8,
    max_candidates: int = 5000,
) -> Closure:
    """
    Breadth-first closure: start from `seeds`, add every admitted placement
    touching a known monomial, then treat its monomials as known. Stops at a
    fixpoint (complete=True) or when a limit is hit.
    """
    found: Dict[Tuple, Placement] = {}
    known: Set[BracketedWord] = set(seeds)
    frontier = sorted(known, key=structural_key)
    rounds = 0
    while frontier:
        if rounds >= max_rounds:
            logger.info("placement closure stopped after %d rounds (%d placements)", rounds, len(found))
            return Closure(list(found.values()), known, False, rounds)
        rounds += 1
        next_frontier: List[BracketedWord] = []
        for w in frontier:
            for placement in placements_at(w, patterns, params):
                if placement.key in found or not admit(placement):
                    continue
                found[placement.key] = placement
                if len(found) > max_candidates:
                    logger.info("placement closure hit the candidate limit (%d)", max_candidates)
                    return Closure(list(found.values()), known, False, rounds)
                for m in placement.polynomial.support:
                    if m not in known:
                        known.add(m)
                        next_frontier.append(m)
        frontier = next_frontier
    return Closure(list(found.values()), known, True, rounds)
