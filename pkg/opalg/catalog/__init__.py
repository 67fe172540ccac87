# opalg/catalog/__init__.py

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from core.errors import PatternError
from core.orders import OrderKind
from core.patterns import OPIPattern
from opalg.catalog.base import OPIFamily, PatternSpec
from opalg.catalog.classical import ClassicalFamily
from opalg.catalog.multiplicity_one import MultiplicityOneFamily
from opalg.catalog.multiplicity_two import RankNineteenFamily, RankSixteenFamily, RotaBaxterFamily

logger = logging.getLogger("Catalog")

FAMILIES: Tuple[OPIFamily, ...] = (
    MultiplicityOneFamily(),
    RankSixteenFamily(),
    RankNineteenFamily(),
    RotaBaxterFamily(),
    ClassicalFamily(),
)


@lru_cache(maxsize=1)
def _registry() -> Dict[str, OPIPattern]:
    registry: Dict[str, OPIPattern] = {}
    for family in FAMILIES:
        for pattern in family.patterns():
            if pattern.id in registry:
                raise PatternError(f"Duplicate catalog id '{pattern.id}'")
            registry[pattern.id] = pattern
    logger.info("loaded %d catalog patterns from %d families", len(registry), len(FAMILIES))
    return registry


def all_patterns() -> List[OPIPattern]:
    return list(_registry().values())


def catalog() -> List[Tuple[OPIPattern, Tuple[OrderKind, ...]]]:
    """Every catalog pattern with the orders it is paired with."""
    return [(p, p.sound_orders) for p in all_patterns()]


def lookup(pattern_id: str) -> OPIPattern:
    registry = _registry()
    if pattern_id in registry:
        return registry[pattern_id]
    folded = {k.lower(): v for k, v in registry.items()}
    try:
        return folded[pattern_id.strip().lower()]
    except KeyError:
        raise PatternError(f"Unknown catalog pattern '{pattern_id}'") from None


def lookup_many(ids: Iterable[str]) -> List[OPIPattern]:
    return [lookup(i) for i in ids]


def family_of(family_name: str) -> List[OPIPattern]:
    return [p for p in all_patterns() if p.family == family_name]


def sign_mutants(pattern: OPIPattern) -> List[OPIPattern]:
    """
    Every single-term sign flip of a non-monomial pattern. Mutants lose the
    declared leads; their leads are derived at fresh generators.
    """
    if pattern.is_monomial:
        return []
    return [pattern.with_term_negated(i) for i in range(len(pattern.body))]


def pairings(classified_only: bool = True) -> List[Tuple[OPIPattern, OrderKind]]:
    out = []
    for pattern in all_patterns():
        if classified_only and not pattern.classified:
            continue
        out.extend((pattern, order) for order in pattern.sound_orders)
    return out


__all__ = [
    "FAMILIES",
    "OPIFamily",
    "PatternSpec",
    "all_patterns",
    "catalog",
    "family_of",
    "lookup",
    "lookup_many",
    "pairings",
    "sign_mutants",
]
