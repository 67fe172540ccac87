# opalg/catalog/multiplicity_two.py

from __future__ import annotations

from typing import List

from core.orders import OrderKind
from opalg.catalog.base import OPIFamily, PatternSpec

O_QC = (OrderKind.O, OrderKind.QC)


def _o_qc(lead: str):
    return {OrderKind.O: lead, OrderKind.QC: lead}


class RankSixteenFamily(OPIFamily):
    """Multiplicity 2 with L^2(x1*x2) dominant: the double-differential trio and three monomials."""

    name = "rank-16"

    def specs(self) -> List[PatternSpec]:
        return [
            PatternSpec(
                id="double-differential",
                body="L^2(x1*x2) - L^2(x1)*x2 - x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="double-left",
                body="L^2(x1*x2) - L^2(x1)*x2",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="double-right",
                body="L^2(x1*x2) - x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="double-bracket-monomial",
                body="L^2(x1*x2)",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="double-left-monomial",
                body="L^2(x1)*x2",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1)*x2"),
            ),
            PatternSpec(
                id="double-right-monomial",
                body="x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("x1*L^2(x2)"),
            ),
        ]


class RankNineteenFamily(OPIFamily):
    """The new identities A, B, C and P1..P5."""

    name = "rank-19"

    def specs(self) -> List[PatternSpec]:
        return [
            PatternSpec(
                id="new-identity-A-right",
                body="L^2(x1*x2) + L(x1*L(x2)) + x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="new-identity-A-left",
                body="L^2(x1*x2) + L(L(x1)*x2) + L^2(x1)*x2",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
            ),
            PatternSpec(
                id="new-identity-B-right",
                body="L^2(x1*x2) + d*L(x1*L(x2)) - (d+1)*x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
                nonzero=("d",),
            ),
            PatternSpec(
                id="new-identity-B-left",
                body="L^2(x1*x2) + b*L(L(x1)*x2) - (b+1)*L^2(x1)*x2",
                sound_orders=O_QC,
                leads=_o_qc("L^2(x1*x2)"),
                nonzero=("b",),
            ),
            PatternSpec(
                id="new-identity-C",
                body=(
                    "L^2(x1*x2) + L^2(x1)*x2 + x1*L^2(x2) + 2*L(x1)*L(x2)"
                    " - 2*L(L(x1)*x2) - 2*L(x1*L(x2))"
                ),
                sound_orders=(OrderKind.DT,),
                # o and qc carry the L(x1)*L(x2) lead the identity is usually stated with;
                # under qc the true lead is L^2(x1*x2), so check_gs rejects that pairing
                leads={OrderKind.DT: "L^2(x1*x2)", **_o_qc("L(x1)*L(x2)")},
                unstable_orders=O_QC,
                description=(
                    "rewrites diverge under o: L(x)L^2(y) comes back with coefficient 1/4; "
                    "the L(x1)*L(x2) lead is not the qc lead"
                ),
            ),
            PatternSpec(
                id="P1",
                body="L(L(x1)*x2) - L^2(x1)*x2",
                sound_orders=O_QC,
                leads=_o_qc("L(L(x1)*x2)"),
            ),
            PatternSpec(id="P2", body="L(L(x1)*x2)", sound_orders=O_QC, leads=_o_qc("L(L(x1)*x2)")),
            PatternSpec(
                id="P3",
                body="L(x1*L(x2)) - x1*L^2(x2)",
                sound_orders=O_QC,
                leads=_o_qc("L(x1*L(x2))"),
            ),
            PatternSpec(id="P4", body="L(x1*L(x2))", sound_orders=O_QC, leads=_o_qc("L(x1*L(x2))")),
            PatternSpec(id="P5", body="L(x1)*L(x2)", sound_orders=O_QC, leads=_o_qc("L(x1)*L(x2)")),
        ]


class RotaBaxterFamily(OPIFamily):
    """Rota-Baxter type identities, led by L(x1)*L(x2) under o."""

    name = "rota-baxter"

    def specs(self) -> List[PatternSpec]:
        lead = {OrderKind.O: "L(x1)*L(x2)"}
        return [
            PatternSpec(
                id="rota-baxter",
                body="L(x1)*L(x2) - L(L(x1)*x2) - L(x1*L(x2))",
                sound_orders=(OrderKind.O,),
                leads=lead,
                description="Rota-Baxter operator of weight 0",
            ),
            PatternSpec(
                id="nijenhuis",
                body="L(x1)*L(x2) - L(L(x1)*x2) - L(x1*L(x2)) + L^2(x1*x2)",
                sound_orders=(OrderKind.O,),
                leads=lead,
            ),
            PatternSpec(
                id="average",
                body="L(x1)*L(x2) - L(x1*L(x2))",
                sound_orders=(OrderKind.O,),
                leads=lead,
            ),
            PatternSpec(
                id="inverse-average",
                body="L(x1)*L(x2) - L(L(x1)*x2)",
                sound_orders=(OrderKind.O,),
                leads=lead,
            ),
        ]
