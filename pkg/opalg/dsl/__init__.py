# opalg/dsl/__init__.py

from __future__ import annotations

import json
from typing import Any, List, Mapping, Optional, Union

from core.orders import OrderKind
from core.polynomials import OperatedPolynomial
from core.words import Alphabet, BracketedWord, StarWord
from opalg.dsl.binder import (
    SourceSpec,
    bind_pattern_body,
    bind_polynomial,
    bind_program,
    bind_shape,
    bind_word,
)


def parse(
    source: str,
    gens: Optional[List[str]] = None,
    params: Optional[Mapping[str, object]] = None,
) -> SourceSpec:
    """Parse and bind a DSL source. Raises DSLSyntaxError with diagnostics."""
    return bind_program(source, gens=gens, params=params)


def parse_polynomial(
    text: str,
    alphabet: Optional[Alphabet] = None,
    params: Optional[Mapping[str, object]] = None,
    infer: Optional[bool] = None,
) -> OperatedPolynomial:
    return bind_polynomial(text, alphabet=alphabet, params=params, infer=infer)


def parse_word(text: str, alphabet: Optional[Alphabet] = None, infer: Optional[bool] = None) -> BracketedWord:
    return bind_word(text, alphabet=alphabet, infer=infer)


def render(
    value: Union[OperatedPolynomial, BracketedWord, StarWord, Any],
    fmt: str = "text",
    order: Optional[OrderKind] = None,
) -> str:
    """
    Text form of words, polynomials and reports.

    parse_word(render(u)) == u and parse_polynomial(render(p)) == p when the
    generators are declared in rank order.
    """
    if isinstance(value, OperatedPolynomial):
        return json.dumps(value.to_dict(), ensure_ascii=False) if fmt == "json" else value.render(order)
    if isinstance(value, (BracketedWord, StarWord)):
        return json.dumps(str(value), ensure_ascii=False) if fmt == "json" else str(value)
    if fmt == "json":
        payload = value.to_dict() if hasattr(value, "to_dict") else value
        return json.dumps(payload, indent=2, ensure_ascii=False, default=str)
    if hasattr(value, "render_text"):
        return value.render_text()
    return str(value)


__all__ = [
    "SourceSpec",
    "bind_pattern_body",
    "bind_shape",
    "parse",
    "parse_polynomial",
    "parse_word",
    "render",
]
