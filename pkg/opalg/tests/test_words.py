# opalg/tests/test_words.py

import pytest
from hypothesis import given

from core.errors import WordError
from core.words import (
    IDENTITY_CONTEXT,
    STAR,
    Alphabet,
    Bracket,
    BracketedWord,
    StarWord,
    bracket,
    concat,
    find_subword_contexts,
    l_block_decompose,
    measure,
    mirror,
    substitute,
)
from opalg.tests.strategies import XYZ, X, Y, Z, contexts, w, words


def test_bracket_wraps_one_prime():
    assert str(bracket(X)) == "L(x)"
    assert bracket(X).breadth == 1
    assert bracket(concat(X, Y)).depth == 1
    assert bracket(w("L(x)*y")).depth == 2


def test_empty_word_is_rejected():
    with pytest.raises(WordError):
        BracketedWord(())
    with pytest.raises(WordError):
        bracket(None)


def test_concat_is_associative_and_adds_breadth():
    assert concat(concat(X, Y), Z) == concat(X, concat(Y, Z))
    u = concat(bracket(X), bracket(Y))
    assert u.breadth == 2
    assert u.l_breadth == 2


def test_measure_on_block_example():
    alphabet = Alphabet(["x0", "x1", "x2", "x3", "x4", "x5"])
    x0, x1, x2, x3, x4, x5 = (BracketedWord((g,)) for g in alphabet)
    u = concat(concat(concat(x0, bracket(x1)), concat(x2, bracket(concat(x3, x4)))), x5)
    m = measure(u)
    assert (m.l_degree, m.l_breadth) == (2, 2)
    assert (m.z_degree, m.breadth) == (6, 5)

    blocks = l_block_decompose(u)
    assert [len(f) for f in blocks.outer_factors] == [1, 1, 1]
    assert blocks.bracket_args == (x1, concat(x3, x4))


def test_measure_bracket_free():
    assert tuple(measure(w("x*y*z"))) == (3, 0, 3, 0, 0)


def test_l_block_decompose_adjacent_brackets():
    blocks = l_block_decompose(w("L(x)*L(y)"))
    assert blocks.outer_factors == ((), (), ())
    assert blocks.bracket_args == (X, Y)

    free = l_block_decompose(w("x*y*z"))
    assert free.r == 0
    assert free.outer_factors == (tuple(XYZ),)


def test_substitute_examples():
    assert substitute(IDENTITY_CONTEXT, w("L(x)*y")) == w("L(x)*y")

    q = StarWord((Bracket(StarWord((STAR, XYZ["z"]))),))
    assert str(q) == "L(⋆*z)"
    assert substitute(q, w("x*y")) == w("L(x*y*z)")

    q2 = StarWord((Bracket(StarWord((Bracket(StarWord((STAR, XYZ["z"]))),))),))
    assert str(q2) == "L^2(⋆*z)"
    assert substitute(q2, w("L^2(x*y)")) == w("L^2(L^2(x*y)*z)")


def test_star_word_needs_exactly_one_hole():
    with pytest.raises(WordError):
        StarWord((XYZ["x"],))
    with pytest.raises(WordError):
        StarWord((STAR, STAR))


def test_find_subword_contexts_examples():
    assert [str(q) for q in find_subword_contexts(w("L(L(x)*y)"), w("L(x)"))] == ["L(⋆*y)"]
    assert [str(q) for q in find_subword_contexts(w("x*x"), X)] == ["⋆*x", "x*⋆"]

    found = find_subword_contexts(w("L^2(L^2(x*y)*z)"), w("L^2(x*y)"))
    assert [str(q) for q in found] == ["L^2(⋆*z)"]
    assert find_subword_contexts(X, Y) == []


def test_rendering_collapses_nested_brackets():
    assert str(bracket(concat(X, Y), times=2)) == "L^2(x*y)"
    assert str(w("L(L(x)*y)*z")) == "L(L(x)*y)*z"


@given(contexts(), words())
def test_substitution_is_found_again(q, u):
    assert q in find_subword_contexts(substitute(q, u), u)


@given(contexts(), words(), words())
def test_substitute_is_injective(q, u, v):
    if u != v:
        assert substitute(q, u) != substitute(q, v)


@given(words(8))
def test_decomposition_reassembles(u):
    assert l_block_decompose(u).reassemble() == u


@given(words(), words())
def test_measures_are_additive(u, v):
    uv = concat(u, v)
    assert uv.breadth == u.breadth + v.breadth
    assert uv.z_degree == u.z_degree + v.z_degree
    assert uv.l_degree == u.l_degree + v.l_degree
    assert bracket(u).l_degree == u.l_degree + 1
    assert bracket(u).depth == u.depth + 1


@given(words())
def test_mirror_is_an_involution(u):
    assert mirror(mirror(u)) == u
    assert measure(mirror(u)) == measure(u)
