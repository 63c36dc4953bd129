from fractions import Fraction

import pytest
from hypothesis import given, settings

from bicomlab.core import gens
from bicomlab.magma import eval_bicom
from bicomlab.operators import anticommutator, commutator
from bicomlab.parsing import (BinOp, ParseError, Var, parse, parse_element, parse_identity,
                              parse_identity_poly, parse_magma)
from strategies import elements, expressions

a, b, c, d, x, y, z = gens("a b c d x y z")


def test_examples():
    assert parse_element("x*y - y*x") == commutator(x, y)
    tortken = "{{a,b},{c,d}} - {{a,d},{c,b}} + {assoc(a,b,c),d} - {assoc(a,d,c),b}"
    assert parse_element(tortken) == 0
    assert eval_bicom(parse_magma(tortken), "anti") == 0
    assert parse_element("1/2*{{x,y},z}") == anticommutator(anticommutator(x, y), z).scale(Fraction(1, 2))


def test_star_is_left_associative():
    e = parse("a*b*c")
    (coef, node), = e.terms
    assert coef == 1
    assert node == BinOp("mul", BinOp("mul", Var("a"), Var("b")), Var("c"))
    assert parse_element("a*b*c") == (a * b) * c != a * (b * c)


def test_identity_sides():
    lhs, rhs = parse_identity("a*b = b*a")
    assert parse_identity_poly("a*b = b*a") == parse_magma("a*b - b*a")
    assert parse_identity_poly("[a,b]") == parse_magma("[a,b]")


def test_juxtaposition_is_rejected():
    with pytest.raises(ParseError):
        parse("x y")


@pytest.mark.parametrize("text, line, col", [
    ("x*(y", 1, 5),
    ("x +\n  * y", 2, 3),
    ("[x,y", 1, 5),
    ("x)", 1, 2),
    ("{x,y}}", 1, 6),
])
def test_error_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_unbalanced_closer_message():
    with pytest.raises(ParseError, match="unbalanced"):
        parse("x)")


def test_zero_denominator():
    with pytest.raises(ParseError, match="zero denominator"):
        parse("1/0*x")


def test_scalar_terms():
    assert parse_element("0") == 0
    assert parse_element("x - x + 0") == 0
    with pytest.raises(ParseError):
        parse("3")


def test_basis_literal():
    assert parse_element("Y[x,y|z]") == x * (y * z)
    assert parse_element("Y[x|y,z]") == (x * y) * z


@settings(max_examples=500, deadline=None)
@given(expressions())
def test_normalize_roundtrip(text):
    f = parse_element(text)
    assert parse_element(str(f)) == f


@given(elements())
def test_element_print_parse_fixpoint(f):
    assert parse_element(str(f)) == f
