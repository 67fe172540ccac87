# opalg/catalog/multiplicity_one.py

from __future__ import annotations

from typing import List

from core.orders import OrderKind
from opalg.catalog.base import OPIFamily, PatternSpec

DT = (OrderKind.DT,)


class MultiplicityOneFamily(OPIFamily):
    """Degree 2, multiplicity 1: the monomial trio and the differential-type trio, under dt."""

    name = "multiplicity-one"

    def specs(self) -> List[PatternSpec]:
        return [
            PatternSpec(
                id="bracket-monomial",
                body="L(x1*x2)",
                sound_orders=DT,
                leads={OrderKind.DT: "L(x1*x2)"},
                description="L(xy) = 0",
            ),
            PatternSpec(
                id="left-monomial",
                body="L(x1)*x2",
                sound_orders=DT,
                leads={OrderKind.DT: "L(x1)*x2"},
                description="L(x)y = 0",
            ),
            PatternSpec(
                id="right-monomial",
                body="x1*L(x2)",
                sound_orders=DT,
                leads={OrderKind.DT: "x1*L(x2)"},
                description="xL(y) = 0",
            ),
            PatternSpec(
                id="half-differential-left",
                body="L(x1*x2) - L(x1)*x2",
                sound_orders=DT,
                leads={OrderKind.DT: "L(x1*x2)"},
                description="L(xy) = L(x)y",
            ),
            PatternSpec(
                id="half-differential-right",
                body="L(x1*x2) - x1*L(x2)",
                sound_orders=DT,
                leads={OrderKind.DT: "L(x1*x2)"},
                description="L(xy) = xL(y)",
            ),
            PatternSpec(
                id="differential",
                body="L(x1*x2) - L(x1)*x2 - x1*L(x2)",
                sound_orders=DT,
                leads={OrderKind.DT: "L(x1*x2)"},
                description="Leibniz rule, differential operator of weight 0",
            ),
        ]
