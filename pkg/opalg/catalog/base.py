# opalg/catalog/base.py

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.orders import OrderKind
from core.patterns import OPIPattern
from opalg.dsl import bind_pattern_body, bind_shape

HEAD = ("x1", "x2")


@dataclass(frozen=True)
class PatternSpec:
    """
    One catalog entry in source form. `body` and the `leads` values are DSL
    text over the head variables x1, x2.
    """
    id: str
    body: str
    sound_orders: Tuple[OrderKind, ...] = ()
    leads: Dict[OrderKind, str] = field(default_factory=dict)
    nonzero: Tuple[str, ...] = ()
    unstable_orders: Tuple[OrderKind, ...] = ()
    classified: bool = True
    description: str = ""

    def build(self, family: str) -> OPIPattern:
        return OPIPattern(
            id=self.id,
            variables=HEAD,
            body=bind_pattern_body(self.id, HEAD, self.body),
            designated_leads=tuple((order, bind_shape(HEAD, text)) for order, text in self.leads.items()),
            sound_orders=self.sound_orders,
            nonzero_params=self.nonzero,
            unstable_orders=self.unstable_orders,
            classified=self.classified,
            description=self.description,
            family=family,
        )


class OPIFamily:
    """
    Base class for catalog families.

    Subclasses should implement `specs`.
    """

    name: str = "base_family"

    def specs(self) -> List[PatternSpec]:
        raise NotImplementedError("OPIFamily subclasses must implement `specs`.")

    def patterns(self) -> List[OPIPattern]:
        return [spec.build(self.name) for spec in self.specs()]
