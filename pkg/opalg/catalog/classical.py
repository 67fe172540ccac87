# opalg/catalog/classical.py

from __future__ import annotations

from typing import List

from core.orders import OrderKind
from opalg.catalog.base import OPIFamily, PatternSpec


class ClassicalFamily(OPIFamily):
    """
    Classical operator identities outside the degree-2 classification.
    Kept for convenience; none of them is part of the classification
    results, hence classified=False.

    Leroux's TD identity needs the unit and is not representable here.
    """

    name = "classical"

    def specs(self) -> List[PatternSpec]:
        return [
            PatternSpec(
                id="differential-weighted",
                body="L(x1*x2) - L(x1)*x2 - x1*L(x2) - lambda*L(x1)*L(x2)",
                sound_orders=(OrderKind.DT,),
                leads={OrderKind.DT: "L(x1*x2)"},
                classified=False,
                description="differential operator of weight lambda",
            ),
            PatternSpec(
                id="rota-baxter-weighted",
                body="L(x1)*L(x2) - L(L(x1)*x2) - L(x1*L(x2)) - lambda*L(x1*x2)",
                sound_orders=(OrderKind.O,),
                leads={OrderKind.O: "L(x1)*L(x2)"},
                classified=False,
                description="Rota-Baxter operator of weight lambda",
            ),
            PatternSpec(
                id="modified-rota-baxter",
                body="L(x1)*L(x2) - L(L(x1)*x2) - L(x1*L(x2)) - lambda*x1*x2",
                sound_orders=(OrderKind.O,),
                leads={OrderKind.O: "L(x1)*L(x2)"},
                classified=False,
                description="modified Rota-Baxter operator of weight lambda",
            ),
            PatternSpec(
                id="modified-differential",
                body="L(x1*x2) - L(x1)*x2 - x1*L(x2) - lambda*x1*x2",
                sound_orders=(OrderKind.DT,),
                leads={OrderKind.DT: "L(x1*x2)"},
                classified=False,
                description="modified differential operator of weight lambda",
            ),
            PatternSpec(
                id="endomorphism",
                body="L(x1*x2) - L(x1)*L(x2)",
                sound_orders=(OrderKind.DT,),
                leads={OrderKind.DT: "L(x1*x2)"},
                classified=False,
                description="algebra endomorphism",
            ),
            PatternSpec(
                id="reynolds",
                body="L(x1)*L(x2) - L(x1*L(x2)) - L(L(x1)*x2) + L(L(x1)*L(x2))",
                classified=False,
                description="Reynolds operator; no catalog order makes it stable",
            ),
        ]
