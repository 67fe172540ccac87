# core/errors.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


class OpalgError(Exception):
    """Base class for every error raised by the library."""


class WordError(OpalgError, ValueError):
    """Malformed bracketed word or ⋆-word."""


class OrderError(OpalgError, ValueError):
    """A comparison was requested outside the domain of an order."""


class PatternError(OpalgError, ValueError):
    """OPI pattern misuse: arity mismatch, unknown pattern id, bad shape."""


class UnboundParameter(OpalgError, KeyError):
    def __init__(self, name: str, pattern_id: Optional[str] = None):
        self.name = name
        self.pattern_id = pattern_id
        where = f" in pattern '{pattern_id}'" if pattern_id else ""
        super().__init__(f"Unbound parameter '{name}'{where}")

    def __str__(self) -> str:
        return self.args[0]


class ParameterConstraintError(OpalgError, ValueError):
    """A parameter value violates a pattern constraint such as d != 0."""


class StabilityViolation(OpalgError):
    """
    The designated leading shape of a pattern is not the true leading
    monomial of one of its instances under the active order.
    """

    def __init__(
        self,
        pattern_id: str,
        args: List[str],
        instance: str,
        expected_lead: str,
        actual_lead: str,
        order: str,
    ):
        self.pattern_id = pattern_id
        self.args_rendered = list(args)
        self.instance = instance
        self.expected_lead = expected_lead
        self.actual_lead = actual_lead
        self.order = order
        super().__init__(
            f"Stability violation for '{pattern_id}' at ({', '.join(args)}) under {order}: "
            f"designated lead {expected_lead}, actual lead {actual_lead}"
        )

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern_id,
            "args": self.args_rendered,
            "instance": self.instance,
            "expected_lead": self.expected_lead,
            "actual_lead": self.actual_lead,
            "order": self.order,
        }


@dataclass
class Diagnostic:
    """
    A single parser or binder message with a source span.

    line/column are 1-based, as reported by lark.
    """
    severity: str
    line: int
    column: int
    length: int
    message: str
    note: str = ""

    def render(self, source_name: str = "<input>") -> str:
        text = f"{source_name}:{self.line}:{self.column}: {self.severity}: {self.message}"
        if self.note:
            text += f"\n  note: {self.note}"
        return text


class DSLSyntaxError(OpalgError):
    """Raised by the DSL front end; carries every diagnostic collected."""

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics) or "syntax error")


class ConfigError(OpalgError, ValueError):
    """Invalid run settings: budgets, bounds, output formats."""
