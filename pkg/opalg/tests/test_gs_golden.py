# opalg/tests/test_gs_golden.py

"""
Golden including-composition cases: for each row, instantiate f, find the
composition with g at the listed context and check that it is trivial.
"""

import pytest

from core.orders import OrderKind
from core.patterns import instantiate, resolve_params
from infra.datasets import load_golden_cases
from opalg.catalog import lookup
from opalg.gs_engine import (
    CompositionKind,
    InstantiationBounds,
    SpanLimits,
    check_triviality,
    enumerate_compositions,
    including_compositions,
)
from opalg.tests.strategies import w

CASES = load_golden_cases()


def _args(text):
    return tuple(w(a) for a in text.split(";"))


def _params(text):
    return resolve_params(dict(item.split("=", 1) for item in text.split(",") if item))


def _record(case):
    pattern = lookup(case["pattern"])
    order = OrderKind.parse(case["order"])
    params = _params(case["params"])
    f = instantiate(pattern, _args(case["f_args"]), order, params)
    g_args = _args(case["g_args"])
    matches = [
        r
        for r in including_compositions(f, [pattern], order, params)
        if str(r.context) == case["context"] and r.g.args == g_args
    ]
    assert len(matches) == 1, f"{case['case_id']}: expected one record, got {len(matches)}"
    return pattern, order, params, matches[0]


def test_golden_file_is_loaded():
    assert len(CASES) >= 20
    assert all(not c["case_id"].startswith("#") for c in CASES)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c["case_id"])
def test_golden_cells_are_canonical(case):
    assert str(w(case["w"])) == case["w"]
    for column in ("f_args", "g_args"):
        assert ";".join(str(a) for a in _args(case[column])) == case[column]


@pytest.mark.parametrize("case", CASES, ids=lambda c: c["case_id"])
def test_golden_composition_is_trivial(case):
    pattern, order, params, rec = _record(case)
    assert rec.kind == CompositionKind.INCLUDING
    assert str(rec.w) == case["w"]

    check_triviality(rec, [pattern], order, params)
    assert rec.trivial, rec.render_text(order)
    if rec.method == "span":
        assert rec.remainder.is_zero


@pytest.mark.parametrize(
    "case",
    [c for c in CASES if c["expect_monomial"]],
    ids=lambda c: c["case_id"],
)
def test_reduction_passes_through_the_expected_monomial(case):
    pattern, order, params, rec = _record(case)
    check_triviality(rec, [pattern], order, params)
    assert rec.method == "reduction"
    assert w(case["expect_monomial"]) in rec.trace.monomials_seen()


def test_monomial_overlaps_cancel():
    bounds = InstantiationBounds(max_z_degree=1, max_l_degree=0, max_depth=0)
    records = enumerate_compositions([lookup("P5")], OrderKind.QC, bounds)
    overlaps = [r for r in records if r.kind == CompositionKind.INTERSECTION]
    assert overlaps
    assert all(r.composition.is_zero for r in overlaps)
    assert str(overlaps[0].w).count("L(") == 3


def test_breadth_one_leads_have_no_overlaps():
    bounds = InstantiationBounds(max_z_degree=2, max_l_degree=0, max_depth=0)
    records = enumerate_compositions([lookup("double-left")], OrderKind.QC, bounds)
    assert records
    assert all(r.kind == CompositionKind.INCLUDING for r in records)


# ----------------------------------------------------------------------
# Parameters and closure limits
# ----------------------------------------------------------------------
B_CASES = [c for c in CASES if c["pattern"].startswith("new-identity-B")]


@pytest.mark.parametrize("value", ["1", "-2", "3/5"])
@pytest.mark.parametrize("case", B_CASES, ids=lambda c: c["case_id"])
def test_identity_b_cases_hold_for_nonzero_parameters(case, value):
    name = "d" if case["pattern"].endswith("-right") else "b"
    pattern, order, params, rec = _record({**case, "params": f"{name}={value}"})
    check_triviality(rec, [pattern], order, params)
    assert rec.trivial, rec.render_text(order)


@pytest.mark.parametrize("case", CASES, ids=lambda c: c["case_id"])
def test_span_cases_are_undecided_without_a_closure(case):
    pattern, order, params, rec = _record(case)
    check_triviality(rec, [pattern], order, params)
    if rec.method != "span":
        pytest.skip("decided by reduction")

    _, _, _, again = _record(case)
    check_triviality(again, [pattern], order, params, span_limits=SpanLimits(max_rounds=0))
    assert again.trivial is False
    assert again.span_complete is False
    assert "placement closure hit its limits" in again.note
