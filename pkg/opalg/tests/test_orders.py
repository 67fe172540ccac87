# opalg/tests/test_orders.py

import pytest
from hypothesis import given, settings

from core.errors import OrderError
from core.orders import Comparison, OrderKind, compare, compare_deg_lex, leading_among, sort_descending
from core.polynomials import OperatedPolynomial
from core.words import bracket, concat, substitute
from opalg.tests.strategies import X, Y, contexts, poly, w, words

LT, EQ, GT = Comparison.LESS, Comparison.EQUAL, Comparison.GREATER
MONOMIAL_ORDERS = [OrderKind.DT, OrderKind.O, OrderKind.QC]


@pytest.mark.parametrize(
    "text, kind",
    [("dt", OrderKind.DT), ("O", OrderKind.O), (" qc ", OrderKind.QC), ("deg-lex", OrderKind.DEG_LEX)],
)
def test_order_names_parse(text, kind):
    assert OrderKind.parse(text) == kind


def test_unknown_order_name():
    with pytest.raises(OrderError):
        OrderKind.parse("lex")


def test_deg_lex_examples():
    assert compare_deg_lex(X, w("x*y")) == LT
    assert compare_deg_lex(w("x*y"), w("y*x")) == LT
    assert compare_deg_lex(w("x*y"), w("x*y")) == EQ
    with pytest.raises(OrderError):
        compare_deg_lex(w("L(x)"), X)


@pytest.mark.parametrize(
    "order, u, v, expected",
    [
        (OrderKind.DT, "x", "L(x)", LT),
        (OrderKind.DT, "L(x)", "L(y)", LT),
        (OrderKind.DT, "x*L(y)", "L(x*y)", LT),
        (OrderKind.O, "x*L^2(y)", "L^2(x*y)", LT),
        (OrderKind.O, "L(x*L(y))", "L^2(x*y)", LT),
        (OrderKind.O, "L^2(x*y)", "L(x)*L(y)", LT),
        (OrderKind.O, "L(x)*L^2(y)", "L^2(x)*L(y)", LT),
        (OrderKind.QC, "x*y", "L(x)", GT),
        (OrderKind.QC, "L(x*L(y))", "L^2(x*y)", LT),
        (OrderKind.QC, "L^2(x)*y", "L^2(x*y)", LT),
        (OrderKind.QC, "L(x)*y", "L(x*y)", LT),
    ],
)
def test_compare_examples(order, u, v, expected):
    assert compare(order, w(u), w(v)) == expected
    assert compare(order, w(v), w(u)).value == -expected.value


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
def test_compare_word_with_itself(order):
    u = w("L(L(x)*y)*z")
    assert compare(order, u, u) == EQ


def test_comparison_symbols():
    assert [c.symbol for c in (LT, EQ, GT)] == ["LT", "EQ", "GT"]


def test_leading_among_examples():
    monomials = [w("L^2(x*y)"), w("L^2(x)*y"), w("x*L^2(y)")]
    assert leading_among(OrderKind.O, monomials) == w("L^2(x*y)")
    assert leading_among(OrderKind.O, [w("L(L(x)*y)"), w("L^2(x)*y")]) == w("L(L(x)*y)")
    assert leading_among(OrderKind.QC, [X]) == X
    with pytest.raises(OrderError):
        leading_among(OrderKind.DT, [])


def test_identity_c_leads():
    c = poly("L^2(x*y) + L^2(x)*y + x*L^2(y) + 2*L(x)*L(y) - 2*L(L(x)*y) - 2*L(x*L(y))")
    assert c.leading(OrderKind.DT).monomial == w("L^2(x*y)")
    assert c.leading(OrderKind.QC).monomial == w("L^2(x*y)")
    assert c.leading(OrderKind.O).monomial == w("L(x)*L(y)")


def test_sort_descending_puts_lead_first():
    p = poly("L^2(x*y) - L^2(x)*y - x*L^2(y)")
    ordered = sort_descending(OrderKind.O, p.support)
    assert ordered[0] == p.leading(OrderKind.O).monomial
    assert len(ordered) == 3


def test_zero_polynomial_has_no_lead():
    with pytest.raises(OrderError):
        OperatedPolynomial.zero().leading(OrderKind.DT)


# ----------------------------------------------------------------------
# Order axioms
# ----------------------------------------------------------------------
def _check_total(order, u, v):
    c = compare(order, u, v)
    assert (c == EQ) == (u == v)
    assert compare(order, v, u).value == -c.value


def _check_transitive(order, u, v, t):
    for a, b, c in ((u, v, t), (v, t, u), (t, u, v), (u, t, v), (v, u, t), (t, v, u)):
        if compare(order, a, b) != GT and compare(order, b, c) != GT:
            assert compare(order, a, c) != GT


def _check_compatible(order, u, v, q):
    c = compare(order, u, v)
    assert compare(order, substitute(q, u), substitute(q, v)) == c


def _check_bracket_growth(order, u):
    assert compare(order, u, bracket(u)) == LT


def _check_products(order, u, v, t):
    c = compare(order, u, v)
    assert compare(order, concat(t, u), concat(t, v)) == c
    assert compare(order, concat(u, t), concat(v, t)) == c


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words(), v=words())
def test_total_and_antisymmetric(order, u, v):
    _check_total(order, u, v)


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words(), v=words(), t=words())
def test_transitive(order, u, v, t):
    _check_transitive(order, u, v, t)


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words(), v=words(), q=contexts())
def test_compatible_with_contexts(order, u, v, q):
    _check_compatible(order, u, v, q)


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words())
def test_bracket_grows(order, u):
    _check_bracket_growth(order, u)


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words(), v=words(), t=words())
def test_compatible_with_products(order, u, v, t):
    _check_products(order, u, v, t)


@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@given(u=words(), v=words())
def test_every_finite_set_has_a_minimum(order, u, v):
    pool = [u, v, bracket(u), concat(u, v), Y]
    least = min(pool, key=lambda m: sum(compare(order, m, n).value for n in pool))
    assert all(compare(order, least, n) != GT for n in pool)


# Large runs of the same checks; select with -m slow.
@pytest.mark.slow
@pytest.mark.parametrize("order", MONOMIAL_ORDERS)
@settings(max_examples=10_000)
@given(u=words(8), v=words(8), t=words(8), q=contexts(6))
def test_order_axioms_at_scale(order, u, v, t, q):
    _check_total(order, u, v)
    _check_transitive(order, u, v, t)
    _check_compatible(order, u, v, q)
    _check_bracket_growth(order, u)
    _check_products(order, u, v, t)
