# opalg/rewrite_engine/models.py

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from core.orders import OrderKind
from core.polynomials import OperatedPolynomial, render_coefficient
from core.words import BracketedWord, StarWord


class ReductionMode(str, Enum):
    INSTANCE = "instance"
    PATTERN = "pattern"

    def __str__(self) -> str:
        return self.value


class ContextStrategy(str, Enum):
    """
    Which redex of a monomial is rewritten first.

      CANONICAL        canonical occurrence order (outer level, then by start)
      INNERMOST_LEFT   deepest nesting first, then leftmost
      OUTERMOST_RIGHT  top level first, then rightmost
    """
    CANONICAL = "canonical"
    INNERMOST_LEFT = "innermost-left"
    OUTERMOST_RIGHT = "outermost-right"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RuleOrigin:
    pattern_id: str
    args: Tuple[BracketedWord, ...]
    params: Tuple[Tuple[str, Fraction], ...] = ()

    @property
    def label(self) -> str:
        return f"{self.pattern_id}({', '.join(str(a) for a in self.args)})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pattern": self.pattern_id,
            "args": [str(a) for a in self.args],
            "params": {k: render_coefficient(v) for k, v in self.params},
        }


@dataclass(frozen=True)
class RewriteRule:
    """lhs -> rhs. In instance mode every monomial of rhs is below lhs."""
    lhs: BracketedWord
    rhs: OperatedPolynomial
    origin: Optional[RuleOrigin] = None

    def render(self, order: Optional[OrderKind] = None) -> str:
        return f"{self.lhs} -> {self.rhs.render(order)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lhs": str(self.lhs),
            "rhs": self.rhs.render(),
            "origin": self.origin.to_dict() if self.origin else None,
        }


def snapshot_hash(p: OperatedPolynomial) -> str:
    return hashlib.sha1(p.render().encode("utf-8")).hexdigest()[:12]


@dataclass
class ReductionStep:
    step: int
    monomial: BracketedWord
    context: StarWord
    rule: RewriteRule
    before: OperatedPolynomial
    after: OperatedPolynomial

    @property
    def snapshot(self) -> str:
        return snapshot_hash(self.after)

    def to_dict(self, order: Optional[OrderKind] = None) -> Dict[str, Any]:
        return {
            "step": self.step,
            "monomial": str(self.monomial),
            "context": str(self.context),
            "rule_origin": self.rule.origin.to_dict() if self.rule.origin else None,
            "before": self.before.render(order),
            "after": self.after.render(order),
            "snapshot": self.snapshot,
        }


class OutcomeKind(str, Enum):
    NORMAL_FORM = "NormalForm"
    BUDGET_EXHAUSTED = "BudgetExhausted"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Outcome:
    kind: OutcomeKind
    polynomial: OperatedPolynomial

    def to_dict(self, order: Optional[OrderKind] = None) -> Dict[str, Any]:
        return {"kind": str(self.kind), "polynomial": self.polynomial.render(order)}


@dataclass
class ReductionTrace:
    """
    Full record of one reduction: the input, every step and the outcome.

    Used by:
      - the GS checker (triviality of a composition)
      - the CLI `reduce` subcommand (text / JSON trace)
    """
    order: OrderKind
    mode: ReductionMode
    start: OperatedPolynomial
    steps: List[ReductionStep] = field(default_factory=list)
    outcome: Optional[Outcome] = None

    @property
    def result(self) -> OperatedPolynomial:
        if self.outcome is not None:
            return self.outcome.polynomial
        return self.steps[-1].after if self.steps else self.start

    @property
    def reached_zero(self) -> bool:
        return self.outcome is not None and self.outcome.kind == OutcomeKind.NORMAL_FORM and self.result.is_zero

    @property
    def rewritten_monomials(self) -> List[BracketedWord]:
        return [s.monomial for s in self.steps]

    def monomials_seen(self) -> List[BracketedWord]:
        seen: Dict[BracketedWord, None] = {}
        for p in [self.start] + [s.after for s in self.steps]:
            for w in p.support:
                seen.setdefault(w, None)
        return list(seen)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": str(self.order),
            "mode": str(self.mode),
            "input": self.start.render(self.order),
            "steps": [s.to_dict(self.order) for s in self.steps],
            "outcome": self.outcome.to_dict(self.order) if self.outcome else None,
        }

    def step_rows(self) -> List[Dict[str, Any]]:
        """The `reduce --format json` payload: one {step, context, rule_origin, before, after} per step."""
        keys = ("step", "context", "rule_origin", "before", "after")
        return [{k: row[k] for k in keys} for row in (s.to_dict(self.order) for s in self.steps)]

    def render_text(self) -> str:
        lines = [f"input: {self.start.render(self.order)}"]
        for s in self.steps:
            origin = s.rule.origin.label if s.rule.origin else "rule"
            lines.append(f"[{s.step}] {s.monomial} at {s.context} by {origin}")
            lines.append(f"    = {s.after.render(self.order)}")
        if self.outcome is not None:
            lines.append(f"{self.outcome.kind}: {self.outcome.polynomial.render(self.order)}")
        return "\n".join(lines)
