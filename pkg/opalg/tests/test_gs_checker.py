# opalg/tests/test_gs_checker.py

import dataclasses
import json
from pathlib import Path

import pytest

from core.errors import ConfigError, StabilityViolation
from core.orders import OrderKind
from core.patterns import resolve_params
from opalg.catalog import lookup, sign_mutants
from opalg.gs_engine import (
    CompositionKind,
    EchelonBasis,
    InstantiationBounds,
    SpanLimits,
    Verdict,
    argument_words,
    check_gs,
    check_pairing_stability,
)
from opalg.rewrite_engine import ideal_membership_oracle
from opalg.rewrite_engine.oracle import witness_sum
from opalg.tests.strategies import poly

SCHEMA = json.loads((Path(__file__).resolve().parents[2] / "docs" / "report_schema.json").read_text("utf-8"))
FLAT = InstantiationBounds(max_z_degree=2, max_l_degree=0, max_depth=0)


def test_argument_word_counts():
    assert len(argument_words(InstantiationBounds(max_z_degree=1, max_l_degree=1, max_depth=1))) == 6
    assert len(argument_words(InstantiationBounds(max_z_degree=2, max_l_degree=1, max_depth=1))) == 42


def test_argument_words_respect_depth():
    words = argument_words(InstantiationBounds(max_z_degree=1, max_l_degree=2, max_depth=1))
    assert all(str(word).count("L(") <= 1 for word in words)


@pytest.mark.parametrize("kwargs", [{"max_z_degree": 0}, {"max_l_degree": -1}, {"pool_size": 2}])
def test_bounds_are_validated(kwargs):
    with pytest.raises(ConfigError):
        InstantiationBounds(**kwargs)


def test_differential_is_gs_under_dt():
    report = check_gs([lookup("differential")], OrderKind.DT, FLAT)
    assert report.verdict == Verdict.ALL_TRIVIAL
    assert report.exit_code == 0
    assert report.n_including > 0
    assert report.n_trivial == report.n_records
    assert report.counterexample is None


def test_sign_mutant_is_caught():
    mutant = sign_mutants(lookup("differential"))[1]
    report = check_gs([mutant], OrderKind.DT, FLAT)
    assert report.verdict == Verdict.COUNTEREXAMPLE
    assert report.exit_code == 1
    cx = report.counterexample
    assert cx.trivial is False
    assert not cx.remainder.is_zero


def test_split_composition_of_identity_a_is_not_trivial_under_qc():
    report = check_gs([lookup("new-identity-A-right")], OrderKind.QC, FLAT)
    assert report.verdict == Verdict.COUNTEREXAMPLE
    assert report.counterexample.kind == CompositionKind.INCLUDING
    assert report.counterexample.method == "span"


def test_fail_fast_stops_at_the_first_failure():
    full = check_gs([lookup("new-identity-A-right")], OrderKind.QC, FLAT)
    fast = check_gs([lookup("new-identity-A-right")], OrderKind.QC, FLAT, fail_fast=True)
    assert fast.stopped_early
    assert fast.verdict == Verdict.COUNTEREXAMPLE
    assert fast.n_records <= full.n_records
    assert not full.stopped_early


def test_unstable_pairing_is_rejected():
    bounds = InstantiationBounds(max_z_degree=1, max_l_degree=1, max_depth=1)
    with pytest.raises(StabilityViolation) as err:
        check_gs([lookup("double-left")], OrderKind.O, bounds)
    assert err.value.order == "o"


def test_pairing_stability_at_fresh_generators():
    differential = lookup("differential")
    check_pairing_stability(differential, OrderKind.DT, resolve_params())

    wrong = dataclasses.replace(
        differential,
        designated_leads=((OrderKind.DT, lookup("new-identity-C").declared_lead(OrderKind.O)),),
    )
    with pytest.raises(StabilityViolation) as err:
        check_pairing_stability(wrong, OrderKind.DT, resolve_params())
    assert err.value.actual_lead == "L(x1*x2)"


def test_identity_c_is_rejected_under_qc():
    with pytest.raises(StabilityViolation) as err:
        check_gs([lookup("new-identity-C")], OrderKind.QC, FLAT)
    assert err.value.order == "qc"
    assert err.value.expected_lead == "L(x1)*L(x2)"
    assert err.value.actual_lead == "L^2(x1*x2)"


@pytest.mark.parametrize(
    "pattern_id",
    ["double-differential", "double-left", "double-right", "P1", "P2", "P3", "P4", "P5"],
)
def test_rank_sixteen_and_p_identities_under_qc(pattern_id):
    report = check_gs([lookup(pattern_id)], OrderKind.QC, FLAT)
    assert report.verdict == Verdict.ALL_TRIVIAL, report.render_text()
    assert report.n_trivial == report.n_records


def test_echelon_basis_reduces_to_a_normal_form():
    basis = EchelonBasis([poly("L(x*y) - L(x)*y"), poly("L(x)*y - x*L(y)")], OrderKind.DT)
    assert len(basis) == 2
    assert basis.reduce(poly("L(x*y)")) == poly("x*L(y)")
    assert basis.reduce(poly("L(x*y) - x*L(y)")).is_zero
    assert basis.reduce(poly("2*y + L(x)*y")) == poly("2*y + x*L(y)")
    assert len(EchelonBasis([], OrderKind.DT)) == 0


# ----------------------------------------------------------------------
# Closure limits, bound levels, oracle agreement
# ----------------------------------------------------------------------
def test_closure_limits_make_the_verdict_inconclusive():
    report = check_gs(
        [lookup("new-identity-A-right")],
        OrderKind.QC,
        FLAT,
        emit_records=True,
        fail_fast=True,
        span_limits=SpanLimits(max_rounds=0, max_candidates=0),
    )
    assert report.verdict == Verdict.INCONCLUSIVE
    assert report.counterexample is None
    assert report.exit_code == 3
    assert not report.stopped_early
    assert report.n_inconclusive > 0
    assert report.n_trivial + report.n_inconclusive == report.n_records
    undecided = [r for r in report.records if not r.trivial]
    assert len(undecided) == report.n_inconclusive
    assert all(r.span_complete is False for r in undecided)
    assert report.to_dict()["n_inconclusive"] == report.n_inconclusive


@pytest.mark.slow
@pytest.mark.parametrize(
    "pattern_id, order",
    [("differential", OrderKind.DT), ("new-identity-A-right", OrderKind.QC)],
)
def test_smaller_bounds_see_a_subset_with_the_same_verdicts(pattern_id, order):
    pattern = lookup(pattern_id)
    small = check_gs([pattern], order, FLAT, emit_records=True)
    large = check_gs([pattern], order, InstantiationBounds(3, 0, 0), emit_records=True)
    verdicts = {r.dedupe_key: r.trivial for r in large.records}
    for rec in small.records:
        assert verdicts[rec.dedupe_key] == rec.trivial
    if large.verdict == Verdict.ALL_TRIVIAL:
        assert small.verdict == Verdict.ALL_TRIVIAL
    if small.verdict == Verdict.COUNTEREXAMPLE:
        assert large.verdict == Verdict.COUNTEREXAMPLE


@pytest.mark.parametrize(
    "pattern_id, order",
    [("differential", OrderKind.DT), ("double-differential", OrderKind.QC), ("double-left", OrderKind.QC)],
)
def test_oracle_confirms_compositions_reduced_to_zero(pattern_id, order):
    pattern = lookup(pattern_id)
    report = check_gs([pattern], order, FLAT, emit_records=True)
    reduced = [r for r in report.records if r.trivial and r.method == "reduction"]
    assert reduced
    for rec in reduced:
        result = ideal_membership_oracle(rec.composition, [pattern])
        assert result.in_ideal, rec.render_text(order)
        assert witness_sum(result) == rec.composition


# ----------------------------------------------------------------------
# Report
# ----------------------------------------------------------------------
def test_report_keys_follow_the_schema():
    report = check_gs([lookup("differential")], OrderKind.DT, FLAT)
    data = report.to_dict()
    assert set(data) == set(SCHEMA["required"])
    assert data["pairing"] == {"patterns": ["differential"], "order": "dt"}
    assert data["bounds"] == {"max_z_degree": 2, "max_l_degree": 0, "max_depth": 0, "pool_size": 3}
    assert data["verdict"] == "AllTrivialWithinBounds"
    json.dumps(data)


def test_records_are_emitted_on_request():
    report = check_gs([lookup("differential")], OrderKind.DT, FLAT, emit_records=True)
    data = report.to_dict()
    assert len(data["records"]) == report.n_records
    keys = [tuple(sorted(r)) for r in data["records"]]
    assert len(set(keys)) == 1
    assert "verdict: AllTrivialWithinBounds" in report.render_text()


def test_parameter_values_are_reported():
    report = check_gs([lookup("new-identity-B-right")], OrderKind.QC, InstantiationBounds(1, 0, 0), {"d": "1/2"})
    assert report.params == {"d": "1/2"}
