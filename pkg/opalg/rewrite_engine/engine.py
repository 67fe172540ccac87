# opalg/rewrite_engine/engine.py

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from core.errors import ConfigError, OrderError, StabilityViolation
from core.orders import OrderKind, sort_descending
from core.patterns import (
    OPIPattern,
    PatternWord,
    bind_params,
    evaluate_pattern,
    instantiate,
    match_args,
    resolve_params,
)
from core.polynomials import OperatedPolynomial
from core.run_config import DEFAULT_BUDGET
from core.words import BracketedWord, Occurrence, StarWord, iter_occurrences
from opalg.rewrite_engine.models import (
    ContextStrategy,
    Outcome,
    OutcomeKind,
    ReductionMode,
    ReductionStep,
    ReductionTrace,
    RewriteRule,
    RuleOrigin,
)

logger = logging.getLogger("RewriteEngine")


def orient(p: OperatedPolynomial, order: OrderKind, origin: Optional[RuleOrigin] = None) -> RewriteRule:
    """Normalize p to monic and split it as lead -> lead - p."""
    if p.is_zero:
        raise OrderError("Cannot orient the zero polynomial")
    monic = p.monic(order)
    lead = monic.leading(order).monomial
    return RewriteRule(lhs=lead, rhs=OperatedPolynomial.monomial(lead) - monic, origin=origin)


@dataclass(frozen=True)
class Redex:
    context: StarWord
    rule: RewriteRule


class RewriteEngine:
    """
    Rewrites with a fixed pattern set, order and parameter binding.

    Responsibilities:
      - find the redex of a monomial: a subword matching a designated lead
        shape, tried in the strategy's occurrence order, patterns in the
        given order, splits leftmost-shortest first
      - instance mode: verify the instance's true lead (StabilityViolation)
      - pattern mode: rewrite by the matched term's coefficient, unchecked
      - reduce the order-largest reducible monomial first
    """

    def __init__(
        self,
        patterns: Sequence[OPIPattern],
        order: OrderKind,
        params: Optional[Mapping[str, object]] = None,
        mode: ReductionMode = ReductionMode.INSTANCE,
        strategy: ContextStrategy = ContextStrategy.CANONICAL,
    ):
        self.patterns = list(patterns)
        self.order = OrderKind(order)
        self.params = resolve_params(params)
        self.mode = ReductionMode(mode)
        self.strategy = ContextStrategy(strategy)

        self._bindings = {p.id: bind_params(p, self.params) for p in self.patterns}
        self._leads: List[Tuple[OPIPattern, PatternWord]] = [
            (p, p.designated_lead(self.order, self.params)) for p in self.patterns
        ]
        self._redex_cache: Dict[BracketedWord, Optional[Redex]] = {}

    # ------------------------------------------------------------------
    # Redex search
    # ------------------------------------------------------------------
    def _occurrences(self, w: BracketedWord) -> List[Occurrence]:
        occs = list(iter_occurrences(w))
        if self.strategy == ContextStrategy.INNERMOST_LEFT:
            occs.sort(key=lambda o: (-len(o.path), o.path, o.start, o.end))
        elif self.strategy == ContextStrategy.OUTERMOST_RIGHT:
            occs.sort(key=lambda o: (len(o.path), tuple(-i for i in o.path), -o.start, o.end))
        return occs

    def _origin(self, pattern: OPIPattern, args: Tuple[BracketedWord, ...]) -> RuleOrigin:
        return RuleOrigin(pattern_id=pattern.id, args=args, params=self._bindings[pattern.id])

    def _rule(self, pattern: OPIPattern, shape: PatternWord, args, matched: BracketedWord) -> Optional[RewriteRule]:
        origin = self._origin(pattern, args)
        if self.mode == ReductionMode.INSTANCE:
            inst = instantiate(pattern, args, self.order, self.params, lead_shape=shape)
            return RewriteRule(
                lhs=inst.lead,
                rhs=OperatedPolynomial.monomial(inst.lead) - inst.polynomial,
                origin=origin,
            )
        poly = evaluate_pattern(pattern, args, self.params)
        c = poly.coefficient(matched)
        if not c:
            return None
        return RewriteRule(
            lhs=matched,
            rhs=OperatedPolynomial.monomial(matched) - poly.scale(1 / c),
            origin=origin,
        )

    def find_redex(self, w: BracketedWord) -> Optional[Redex]:
        if w in self._redex_cache:
            return self._redex_cache[w]
        for occ in self._occurrences(w):
            sub = occ.subword(w)
            for pattern, shape in self._leads:
                if shape.breadth != sub.breadth:
                    continue
                for args in match_args(shape, sub, pattern.arity):
                    rule = self._rule(pattern, shape, args, sub)
                    if rule is None:
                        continue
                    redex = Redex(context=occ.context(w), rule=rule)
                    self._redex_cache[w] = redex
                    return redex
        self._redex_cache[w] = None
        return None

    def next_redex(self, p: OperatedPolynomial) -> Optional[Tuple[BracketedWord, Redex]]:
        for m in sort_descending(self.order, p.support):
            redex = self.find_redex(m)
            if redex is not None:
                return m, redex
        return None

    # ------------------------------------------------------------------
    # Reduction
    # ------------------------------------------------------------------
    def reduce(self, p: OperatedPolynomial, budget: Optional[int] = None) -> ReductionTrace:
        trace = ReductionTrace(order=self.order, mode=self.mode, start=p)
        current = p
        while True:
            found = self.next_redex(current)
            if found is None:
                trace.outcome = Outcome(OutcomeKind.NORMAL_FORM, current)
                break
            if budget is not None and len(trace.steps) >= budget:
                trace.outcome = Outcome(OutcomeKind.BUDGET_EXHAUSTED, current)
                break
            m, redex = found
            a = current.coefficient(m)
            after = current - OperatedPolynomial.monomial(m, a) + redex.rule.rhs.placed(redex.context).scale(a)
            trace.steps.append(
                ReductionStep(
                    step=len(trace.steps) + 1,
                    monomial=m,
                    context=redex.context,
                    rule=redex.rule,
                    before=current,
                    after=after,
                )
            )
            logger.debug("step %d: %s at %s by %s", len(trace.steps), m, redex.context, redex.rule.origin.label)
            current = after
        logger.debug("%s after %d step(s)", trace.outcome.kind, len(trace.steps))
        return trace


# ----------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------
def reduce_instance(
    p: OperatedPolynomial,
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Optional[Mapping[str, object]] = None,
    strategy: ContextStrategy = ContextStrategy.CANONICAL,
) -> ReductionTrace:
    """Normal form of p, checking every instance used (StabilityViolation)."""
    engine = RewriteEngine(patterns, order, params, ReductionMode.INSTANCE, strategy)
    return engine.reduce(p)


def rewrite_pattern_mode(
    p: OperatedPolynomial,
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Optional[Mapping[str, object]] = None,
    budget: int = DEFAULT_BUDGET,
) -> ReductionTrace:
    """Unchecked rewriting by designated lead shapes, stopped after `budget` steps."""
    if budget < 1:
        raise ConfigError(f"budget must be a positive integer, got {budget}")
    engine = RewriteEngine(patterns, order, params, ReductionMode.PATTERN)
    return engine.reduce(p, budget=budget)


def find_instability(
    pattern: OPIPattern,
    order: OrderKind,
    params: Mapping[str, object],
    argument_words: Iterable[BracketedWord],
) -> Optional[StabilityViolation]:
    """First argument tuple (in the given word order) whose instance has a different lead."""
    words = list(argument_words)
    shape = pattern.designated_lead(order, params)
    for args in itertools.product(words, repeat=pattern.arity):
        try:
            instantiate(pattern, args, order, params, lead_shape=shape)
        except StabilityViolation as e:
            return e
    return None
