# opalg/gs_engine/__init__.py

from opalg.gs_engine.engine import (
    argument_words,
    catalog,
    check_gs,
    check_pairing_stability,
    check_triviality,
    enumerate_compositions,
    including_compositions,
    instantiate_bounded,
)
from opalg.gs_engine.models import (
    CompositionKind,
    CompositionRecord,
    GSReport,
    InstantiationBounds,
    Verdict,
)
from opalg.gs_engine.span import EchelonBasis, SpanLimits

__all__ = [
    "CompositionKind",
    "CompositionRecord",
    "EchelonBasis",
    "GSReport",
    "InstantiationBounds",
    "SpanLimits",
    "Verdict",
    "argument_words",
    "catalog",
    "check_gs",
    "check_pairing_stability",
    "check_triviality",
    "enumerate_compositions",
    "including_compositions",
    "instantiate_bounded",
]
