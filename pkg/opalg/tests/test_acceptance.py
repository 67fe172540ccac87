# opalg/tests/test_acceptance.py

"""
Catalog sweeps. The default-bounds runs are marked slow; the split and
stability checks run at small bounds that already expose them.
"""

import pytest

from core.errors import StabilityViolation
from core.orders import OrderKind
from opalg.catalog import all_patterns, family_of, lookup, sign_mutants
from opalg.gs_engine import InstantiationBounds, Verdict, check_gs

FLAT = InstantiationBounds(max_z_degree=2, max_l_degree=0, max_depth=0)
BRACKETED = InstantiationBounds(max_z_degree=1, max_l_degree=1, max_depth=1)


@pytest.mark.slow
@pytest.mark.parametrize("pattern", family_of("multiplicity-one"), ids=lambda p: p.id)
def test_multiplicity_one_identities_under_dt(pattern):
    report = check_gs([pattern], OrderKind.DT)
    assert report.verdict == Verdict.ALL_TRIVIAL, report.render_text()


@pytest.mark.slow
@pytest.mark.parametrize("pattern", family_of("rota-baxter"), ids=lambda p: p.id)
def test_rota_baxter_family_under_o(pattern):
    report = check_gs([pattern], OrderKind.O)
    assert report.verdict == Verdict.ALL_TRIVIAL, report.render_text()


@pytest.mark.parametrize(
    "pattern_id, order",
    [
        ("new-identity-A-right", OrderKind.QC),
        ("new-identity-A-left", OrderKind.QC),
        ("new-identity-B-right", OrderKind.QC),
        ("new-identity-B-left", OrderKind.QC),
        ("new-identity-C", OrderKind.DT),
    ],
)
def test_argument_split_is_not_trivial(pattern_id, order):
    report = check_gs([lookup(pattern_id)], order, FLAT, fail_fast=True)
    assert report.verdict == Verdict.COUNTEREXAMPLE
    cx = report.counterexample
    assert str(cx.context) == "⋆"
    assert cx.f.pattern_id == cx.g.pattern_id == pattern_id


@pytest.mark.parametrize(
    "pattern_id",
    ["double-left", "double-right", "new-identity-A-right", "new-identity-B-right"],
)
def test_square_led_identities_are_unstable_under_o(pattern_id):
    with pytest.raises(StabilityViolation) as err:
        check_gs([lookup(pattern_id)], OrderKind.O, BRACKETED)
    assert err.value.expected_lead.startswith("L^2(")


@pytest.mark.slow
def test_sign_mutants_are_caught():
    caught = total = 0
    for pattern in all_patterns():
        if not pattern.classified or not pattern.sound_orders:
            continue
        order = pattern.sound_orders[0]
        for mutant in sign_mutants(pattern):
            total += 1
            try:
                report = check_gs([mutant], order, fail_fast=True)
            except StabilityViolation:
                caught += 1
                continue
            if report.verdict == Verdict.COUNTEREXAMPLE:
                caught += 1
    assert total > 0
    assert caught >= 0.8 * total, f"{caught}/{total} mutants caught"
