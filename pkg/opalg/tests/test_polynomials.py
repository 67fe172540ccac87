# opalg/tests/test_polynomials.py

from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from core.errors import ParameterConstraintError, StabilityViolation, UnboundParameter
from core.orders import OrderKind
from core.patterns import evaluate_pattern, instantiate, resolve_params
from core.polynomials import OperatedPolynomial, as_fraction, multiply
from core.words import bracket, concat, find_subword_contexts
from opalg.catalog import lookup
from opalg.tests.strategies import X, Y, Z, poly, polynomials, w


def test_render_examples():
    p = OperatedPolynomial.monomial(bracket(concat(X, Y), times=2), Fraction(-1, 2))
    assert p.render() == "-1/2*L^2(x*y)"
    assert OperatedPolynomial.monomial(concat(bracket(X), bracket(Y)), 2).render() == "2*L(x)*L(y)"
    assert OperatedPolynomial.zero().render() == "0"


def test_render_orders_terms_descending():
    p = poly("x*L(y) + L(x*y) - L(x)*y")
    assert p.render(OrderKind.DT) == "L(x*y) - L(x)*y + x*L(y)"


def test_zero_coefficients_are_dropped():
    p = OperatedPolynomial.from_terms([(X, 1), (Y, 2), (X, -1)])
    assert p.support == frozenset({Y})
    assert p - p == 0


def test_as_fraction_is_exact():
    assert as_fraction("3/5") == Fraction(3, 5)
    assert as_fraction(sympy.Rational(-2, 7)) == Fraction(-2, 7)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_apply_l_and_placed():
    p = poly("x*y - 2*z")
    assert p.apply_L() == poly("L(x*y) - 2*L(z)")
    q = w("L(x*y)*z")
    (ctx,) = find_subword_contexts(q, w("x*y"))
    assert poly("x*y + y").placed(ctx) == poly("L(x*y)*z + L(y)*z")


def test_leading_and_monic():
    p = poly("3*L(x*y) - L(x)*y")
    lead = p.leading(OrderKind.DT)
    assert lead.monomial == w("L(x*y)")
    assert lead.coefficient == 3
    assert not p.is_monic(OrderKind.DT)
    assert p.monic(OrderKind.DT) == poly("L(x*y) - 1/3*L(x)*y")


def test_to_dict_uses_exact_coefficients():
    assert poly("1/2*x - y").to_dict() == {"y": "-1", "x": "1/2"}


# ----------------------------------------------------------------------
# Ring laws
# ----------------------------------------------------------------------
@given(polynomials(), polynomials(), polynomials())
def test_addition_laws(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p + OperatedPolynomial.zero() == p
    assert (p - p).is_zero


@given(polynomials(3), polynomials(3), polynomials(3))
def test_multiplication_laws(p, q, r):
    assert multiply(multiply(p, q), r) == multiply(p, multiply(q, r))
    assert multiply(p, q + r) == multiply(p, q) + multiply(p, r)
    assert multiply(p + q, r) == multiply(p, r) + multiply(q, r)


@given(polynomials(), polynomials())
def test_operator_is_linear(p, q):
    assert (p + q).apply_L() == p.apply_L() + q.apply_L()
    assert p.scale(Fraction(3, 2)).apply_L() == p.apply_L().scale(Fraction(3, 2))


# ----------------------------------------------------------------------
# Pattern evaluation
# ----------------------------------------------------------------------
def test_evaluate_identity_c_at_bracketed_argument():
    c = lookup("new-identity-C")
    p = evaluate_pattern(c, (X, w("L(y)")), resolve_params())
    assert p == poly(
        "L^2(x*L(y)) + L^2(x)*L(y) + x*L^3(y) + 2*L(x)*L^2(y) - 2*L(L(x)*L(y)) - 2*L(x*L^2(y))"
    )
    with pytest.raises(StabilityViolation) as err:
        instantiate(c, (X, w("L(y)")), OrderKind.O, resolve_params())
    assert err.value.actual_lead == "L^2(x)*L(y)"
    assert err.value.expected_lead == "L(x)*L^2(y)"


def test_instances_are_monic():
    b = lookup("new-identity-B-right")
    inst = instantiate(b, (X, Y), OrderKind.QC, resolve_params({"d": "3/5"}))
    assert inst.lead == w("L^2(x*y)")
    assert inst.polynomial.coefficient(w("x*L^2(y)")) == Fraction(-8, 5)
    assert inst.polynomial.is_monic(OrderKind.QC)


def test_parameter_constraints():
    b = lookup("new-identity-B-right")
    with pytest.raises(ParameterConstraintError):
        evaluate_pattern(b, (X, Y), resolve_params({"d": 0}))
    with pytest.raises(UnboundParameter):
        evaluate_pattern(b, (X, Y), {"lambda": 0})


def test_weighted_identity_uses_lambda():
    rb = lookup("rota-baxter-weighted")
    p = evaluate_pattern(rb, (X, Z), resolve_params({"lambda": "1/2"}))
    assert p.coefficient(w("L(x*z)")) == Fraction(-1, 2)
