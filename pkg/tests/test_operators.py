from fractions import Fraction

import pytest
from hypothesis import given

from bicomlab.core import Element, Pair, gens, involute, minus_part, multidegree, multilinear_letters, plus_part
from bicomlab.operators import (BracketSum, Product, anticommutator, commutator, dynkin, head,
                                is_jordan, is_lie, jordan_express, left_normed, left_normed_tree,
                                lie_expansion_rhs, lie_express, metabelian_trees, tail)
from bicomlab.parsing import parse_element
from strategies import elements, metabelian_combinations, multilinear_elements

a, b, c, d, x, y, z, t = gens("a b c d x y z t")
half = Fraction(1, 2)


def P(col, row):
    return Element.word(Pair(tuple(col), tuple(row)))


def test_products_examples():
    assert commutator(x, y) == P("x", "y") - P("y", "x")
    assert anticommutator(x, x) == 2 * P("x", "x")
    assert commutator(commutator(x, y), commutator(z, t)) == 0


def test_left_normed():
    assert left_normed(Product.COM, "xy") == x * y - y * x
    assert left_normed(Product.COM, "xyzt") == lie_expansion_rhs("xyzt")
    # weak right-commutativity with a decomposable first slot
    assert left_normed(Product.ANTI, "xyzt") == left_normed(Product.ANTI, "xytz")
    with pytest.raises(ValueError):
        left_normed(Product.COM, "x")


def test_dynkin_examples():
    assert dynkin(P("a", "b")) == (a * b - b * a).scale(half)
    assert dynkin(x) == x
    assert dynkin(P("ac", "b")) == commutator(c, commutator(a, b)).scale(half)


def test_head_tail_worked_example():
    x1, x2, x3, x4 = gens("x1 x2 x3 x4")
    f = (((x1 * x2) * x3) * x4 + ((x3 * x1) * x2) * x4 - x2 * ((x1 * x3) * x4)
         - x4 * ((x3 * x1) * x2) - x4 * (x3 * (x2 * x1)) - x4 * (x2 * (x1 * x3)))
    expect_head = P(["x3"], ["x1", "x2", "x4"]) - P(["x1", "x2", "x4"], ["x3"])
    assert head(f) == expect_head
    assert tail(f) == f - expect_head
    assert len(tail(f)) == 4


def test_head_degree_two():
    f = x * y - y * x
    assert head(f) == f
    assert dynkin(head(f)) == f


def test_head_needs_multilinear():
    with pytest.raises(ValueError, match="head requires multilinear element"):
        head(x * x)


def test_jordan_examples():
    assert is_jordan(anticommutator(x, y))
    assert not is_jordan(x * y)
    f = plus_part((a * b) * c)
    assert is_jordan(f)
    expect = parse_element("1/2*{{a,b},c} + 1/2*{{a,c},b} - 1/2*{{b,c},a}")
    assert f == expect
    assert str(jordan_express(f)) == "1/2*{{a,b},c} + 1/2*{{a,c},b} - 1/2*{{b,c},a}"
    assert str(jordan_express(x * y + y * x)) == "{x,y}"


def test_jordan_express_row_recursion():
    f = plus_part(P("x", "yzt"))
    e = jordan_express(f)
    assert e.ops() == {"anti"}
    assert e.evaluate() == f


def test_jordan_express_rejects():
    with pytest.raises(ValueError, match="not a Jordan element"):
        jordan_express(x * y)


def test_lie_examples():
    assert is_lie(x * y - y * x)
    assert not is_lie(P("x", "y"))
    assert is_lie(left_normed("com", "xyz") + left_normed("com", "xzy"))
    assert str(lie_express(x * y - y * x)) == "[x,y]"
    assert str(lie_express(left_normed("com", "xyz").scale(3))) == "3*[[x,y],z]"
    with pytest.raises(ValueError, match="not a Lie element"):
        lie_express(P("x", "y"))
    with pytest.raises(ValueError):
        is_lie(x * x)


def test_lie_expansion_small():
    assert lie_expansion_rhs("ab") == minus_part(a * b)
    assert lie_expansion_rhs("abc") == plus_part((a * b) * c) - plus_part(c * (a * b))
    with pytest.raises(ValueError):
        lie_expansion_rhs("aab")


def test_lie_expansion_up_to_seven():
    for n in range(2, 8):
        names = multilinear_letters(n)
        assert left_normed(Product.COM, names) == lie_expansion_rhs(names)


def test_metabelian_trees_degree_three():
    ts = metabelian_trees(("x1", "x2", "x3"))
    assert ts == [left_normed_tree("com", ["x1", "x2", "x3"]), left_normed_tree("com", ["x1", "x3", "x2"])]


@given(metabelian_combinations())
def test_lie_roundtrip(expr):
    f = expr.evaluate()
    assert is_lie(f)
    assert dynkin(head(f)) == f
    assert lie_express(f) == expr


@given(multilinear_elements())
def test_jordan_roundtrip(g):
    f = plus_part(g)
    assert is_jordan(f)
    e = jordan_express(f)
    assert e.ops() <= {"anti"}
    assert e.evaluate() == f


@given(elements(max_degree=4))
def test_jordan_nonmultilinear(g):
    f = plus_part(g)
    assert jordan_express(f).evaluate() == f


@given(multilinear_elements())
def test_dynkin_image_is_skew_or_symmetric(g):
    # commutators of odd length are symmetric, even length skew
    n = sum(multidegree(g).values())
    h = dynkin(g)
    assert involute(h) == (h if n % 2 else -h)


def test_bracket_sum_printing():
    s = BracketSum({("com", "x", "y"): Fraction(-1, 2)})
    assert str(s) == "-1/2*[x,y]"
    assert str(BracketSum()) == "0"
