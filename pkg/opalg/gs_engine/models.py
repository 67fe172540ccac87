# opalg/gs_engine/models.py

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from core.errors import ConfigError
from core.orders import OrderKind
from core.patterns import PatternInstance
from core.polynomials import OperatedPolynomial
from core.words import BracketedWord, StarWord, structural_key
from opalg.rewrite_engine.models import ReductionTrace

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class InstantiationBounds:
    """
    Argument words of the bounded substitution set: z_degree, l_degree and
    depth limits over a pool of `pool_size` generators (x, y, z by default).
    """
    max_z_degree: int = 2
    max_l_degree: int = 2
    max_depth: int = 2
    pool_size: int = 3

    def __post_init__(self) -> None:
        if self.max_z_degree < 1:
            raise ConfigError(f"max_z_degree must be >= 1, got {self.max_z_degree}")
        if self.max_l_degree < 0 or self.max_depth < 0:
            raise ConfigError("max_l_degree and max_depth must be >= 0")
        if self.pool_size < 3:
            raise ConfigError(f"pool_size must be >= 3, got {self.pool_size}")

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class CompositionKind(str, Enum):
    INTERSECTION = "Intersection"
    INCLUDING = "Including"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class InstanceRef:
    pattern_id: str
    args: Tuple[BracketedWord, ...]

    @classmethod
    def of(cls, inst: PatternInstance) -> "InstanceRef":
        return cls(inst.pattern_id, inst.args)

    @property
    def label(self) -> str:
        return f"{self.pattern_id}({', '.join(str(a) for a in self.args)})"

    def to_dict(self) -> Dict[str, Any]:
        return {"pattern": self.pattern_id, "args": [str(a) for a in self.args]}


@dataclass
class CompositionRecord:
    kind: CompositionKind
    f: InstanceRef
    g: InstanceRef
    w: BracketedWord
    composition: OperatedPolynomial
    u: Optional[BracketedWord] = None
    v: Optional[BracketedWord] = None
    context: Optional[StarWord] = None

    # filled by check_triviality
    trace: Optional[ReductionTrace] = None
    trivial: Optional[bool] = None
    method: Optional[str] = None
    remainder: Optional[OperatedPolynomial] = None
    span_complete: Optional[bool] = None
    note: str = ""

    @property
    def witness(self) -> str:
        if self.kind == CompositionKind.INTERSECTION:
            return f"u={self.u}, v={self.v}"
        return f"q={self.context}"

    @property
    def dedupe_key(self) -> Tuple:
        return (self.kind, self.w, self.witness, self.f, self.g)

    @property
    def sort_key(self) -> Tuple:
        return (str(self.kind), structural_key(self.w), self.witness, self.f.label, self.g.label)

    def to_dict(self, order: Optional[OrderKind] = None) -> Dict[str, Any]:
        witness: Dict[str, str] = (
            {"u": str(self.u), "v": str(self.v)}
            if self.kind == CompositionKind.INTERSECTION
            else {"context": str(self.context)}
        )
        return {
            "kind": str(self.kind),
            "f": self.f.to_dict(),
            "g": self.g.to_dict(),
            "w": str(self.w),
            "witness": witness,
            "composition": self.composition.render(order),
            "trivial": self.trivial,
            "method": self.method,
            "normal_form": self.trace.result.render(order) if self.trace else None,
            "remainder": self.remainder.render(order) if self.remainder is not None else None,
            "span_complete": self.span_complete,
            "note": self.note,
            "trace": [s.to_dict(order) for s in self.trace.steps] if self.trace else [],
        }

    def render_text(self, order: Optional[OrderKind] = None) -> str:
        head = f"{self.kind} {self.f.label} / {self.g.label} at w = {self.w} ({self.witness})"
        status = "trivial" if self.trivial else "NOT trivial"
        lines = [head, f"  composition: {self.composition.render(order)}", f"  {status} by {self.method}"]
        if self.remainder is not None and not self.remainder.is_zero:
            lines.append(f"  remainder: {self.remainder.render(order)}")
        if self.note:
            lines.append(f"  note: {self.note}")
        return "\n".join(lines)


class Verdict(str, Enum):
    ALL_TRIVIAL = "AllTrivialWithinBounds"
    COUNTEREXAMPLE = "CounterexampleFound"
    # some composition neither reduced to 0 nor fell in a complete placement span
    INCONCLUSIVE = "InconclusiveWithinLimits"

    def __str__(self) -> str:
        return self.value


@dataclass
class GSReport:
    """
    Result of check_gs for one (OPI set, order) pairing. The verdict is
    bounded: it never claims the GS property beyond `bounds`.
    """
    patterns: List[str]
    order: OrderKind
    bounds: InstantiationBounds
    params: Dict[str, str]
    n_instances: int = 0
    n_intersection: int = 0
    n_including: int = 0
    n_trivial: int = 0
    n_by_span: int = 0
    n_inconclusive: int = 0
    verdict: Verdict = Verdict.ALL_TRIVIAL
    counterexample: Optional[CompositionRecord] = None
    records: List[CompositionRecord] = field(default_factory=list)
    emit_records: bool = False
    stopped_early: bool = False
    schema_version: str = SCHEMA_VERSION

    @property
    def n_records(self) -> int:
        return self.n_intersection + self.n_including

    @property
    def exit_code(self) -> int:
        if self.verdict == Verdict.ALL_TRIVIAL:
            return 0
        return 1 if self.verdict == Verdict.COUNTEREXAMPLE else 3

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema_version": self.schema_version,
            "pairing": {"patterns": list(self.patterns), "order": str(self.order)},
            "bounds": self.bounds.to_dict(),
            "params": dict(self.params),
            "n_instances": self.n_instances,
            "n_intersection": self.n_intersection,
            "n_including": self.n_including,
            "n_trivial": self.n_trivial,
            "n_by_span": self.n_by_span,
            "n_inconclusive": self.n_inconclusive,
            "verdict": str(self.verdict),
            "stopped_early": self.stopped_early,
            "counterexample": self.counterexample.to_dict(self.order) if self.counterexample else None,
        }
        if self.emit_records:
            data["records"] = [r.to_dict(self.order) for r in self.records]
        return data

    def render_text(self) -> str:
        b = self.bounds
        lines = [
            f"pairing: {', '.join(self.patterns)} under {self.order}",
            f"bounds: z_degree <= {b.max_z_degree}, l_degree <= {b.max_l_degree}, "
            f"depth <= {b.max_depth}, pool {b.pool_size}",
            f"instances: {self.n_instances}",
            f"compositions: {self.n_intersection} intersection, {self.n_including} including",
            f"trivial: {self.n_trivial} ({self.n_by_span} by span), inconclusive: {self.n_inconclusive}",
            f"verdict: {self.verdict}",
        ]
        if self.counterexample is not None:
            lines.append(self.counterexample.render_text(self.order))
        if self.emit_records:
            lines.extend(r.render_text(self.order) for r in self.records)
        return "\n".join(lines)
