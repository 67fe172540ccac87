# opalg/tests/test_catalog.py

import pytest

from core.errors import PatternError
from core.orders import OrderKind
from core.patterns import derive_lead_shape, resolve_params
from opalg.catalog import (
    all_patterns,
    catalog,
    family_of,
    lookup,
    lookup_many,
    pairings,
    sign_mutants,
)

MULTIPLICITY_ONE = [
    "bracket-monomial",
    "left-monomial",
    "right-monomial",
    "half-differential-left",
    "half-differential-right",
    "differential",
]


def test_lookup_is_case_insensitive():
    assert lookup("p1").id == "P1"
    assert lookup("Differential").id == "differential"
    assert [p.id for p in lookup_many(["P5", "average"])] == ["P5", "average"]


def test_unknown_id():
    with pytest.raises(PatternError):
        lookup("no-such-identity")


def test_catalog_ids_are_unique():
    ids = [p.id for p in all_patterns()]
    assert len(ids) == len(set(ids))
    assert len(catalog()) == len(ids)


def test_families():
    assert [p.id for p in family_of("multiplicity-one")] == MULTIPLICITY_ONE
    assert len(family_of("rank-16")) == 6
    assert len(family_of("rank-19")) == 10
    assert {p.id for p in family_of("rota-baxter")} == {"rota-baxter", "nijenhuis", "average", "inverse-average"}


@pytest.mark.parametrize("pattern, order", pairings(), ids=lambda v: str(getattr(v, "id", v)))
def test_declared_lead_is_the_derived_lead(pattern, order):
    declared = pattern.declared_lead(order)
    assert declared is not None
    assert declared == derive_lead_shape(pattern, order, resolve_params())


def test_identity_c_pairings():
    c = lookup("new-identity-C")
    assert c.sound_orders == (OrderKind.DT,)
    assert set(c.unstable_orders) == {OrderKind.O, OrderKind.QC}
    assert str(c.declared_lead(OrderKind.O)) == "L(x1)*L(x2)"
    assert str(c.declared_lead(OrderKind.QC)) == "L(x1)*L(x2)"
    assert c.declared_lead(OrderKind.QC) != derive_lead_shape(c, OrderKind.QC, resolve_params())


def test_parameters_and_constraints():
    assert lookup("new-identity-B-right").parameters == ("d",)
    assert lookup("new-identity-B-left").nonzero_params == ("b",)
    assert lookup("differential-weighted").parameters == ("lambda",)
    assert lookup("P1").parameters == ()


def test_sign_mutants():
    mutants = sign_mutants(lookup("differential"))
    assert len(mutants) == 3
    assert all(not m.classified and m.designated_leads == () for m in mutants)
    assert mutants[1].render_body() == "L(x1*x2) + L(x1)*x2 - x1*L(x2)"
    assert sign_mutants(lookup("P2")) == []


def test_to_dict():
    data = lookup("new-identity-B-left").to_dict()
    assert data["head"] == "new-identity-B-left(x1, x2)"
    assert data["designated_leads"] == {"o": "L^2(x1*x2)", "qc": "L^2(x1*x2)"}
    assert data["nonzero"] == ["b"]
    assert data["family"] == "rank-19"
