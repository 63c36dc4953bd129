import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bicomlab.core import Element, Pair, gens
from bicomlab.identities import EXPECTED_TO_HOLD, SOURCES, identity, product_of
from bicomlab.magma import (FiniteAlgebra, MagmaPoly, eval_bicom, eval_finite, holds_in_bicom,
                            holds_in_finite, load_algebra, martin_algebra, substitute)
from bicomlab.parsing import parse_identity_poly, parse_magma

A = martin_algebra()
e1, e2, e3, e4 = (A.unit(k) for k in range(4))
quarter_e2 = (0, Fraction(1, 4), 0, 0)


def test_substitute_examples():
    p = parse_magma("x*y")
    assert substitute(p, {"x": "a", "y": "b"}) == parse_magma("a*b")
    assert substitute(p, {"x": ("a", "b"), "y": "y"}) == parse_magma("(a*b)*y")
    with pytest.raises(KeyError, match="unmapped variable"):
        substitute(p, {"x": "a"})


def test_substitute_witness_word():
    wrc = parse_magma("((a*b)*c)*d")
    w = substitute(wrc, {"a": "e1", "b": "e1", "c": "e1", "d": "e2"})
    assert str(w) == "e1*e1*e1*e2"


def test_eval_bicom_examples():
    a, b, c = gens("a b c")
    assert eval_bicom(parse_identity_poly("a*(b*c) = b*(a*c)")) == 0
    assert eval_bicom(identity("minus-tortken"), "anti") == 0
    assert eval_bicom(parse_magma("a*(b*c) - (a*b)*c")) == Element.word(Pair("ab", "c")) - Element.word(Pair("a", "bc"))
    assert eval_bicom(parse_magma("x*y"), "plain", {"x": a + b, "y": c}) == a * c + b * c
    with pytest.raises(KeyError, match="unmapped variable"):
        eval_bicom(parse_magma("x*y"), "plain", {"x": a})


def test_named_identities_hold():
    for name in EXPECTED_TO_HOLD:
        assert holds_in_bicom(identity(name), product_of(name)), name


def test_tortken_carries_no_claim_but_is_checkable():
    assert "tortken" in SOURCES and "tortken" not in EXPECTED_TO_HOLD
    assert isinstance(holds_in_bicom(identity("tortken"), "anti"), bool)


def test_eval_finite_examples():
    p = parse_magma("((x*y)*z)*t - ((x*y)*t)*z")
    assert eval_finite(p, A, {"x": e1, "y": e1, "z": e1, "t": e2}) == quarter_e2
    zero = (0, 0, 0, 0)
    assert eval_finite(p, A, {v: zero for v in "xyzt"}) == zero
    assert eval_finite(parse_magma("x*y - y*x"), A, {"x": e1, "y": e2}) == zero
    with pytest.raises(ValueError, match="dimension mismatch"):
        eval_finite(p, A, {"x": (1, 0), "y": e1, "z": e1, "t": e1})


def test_holds_in_finite_examples():
    r = holds_in_finite(identity("minus-tortken"), A)
    assert r.holds and r.assignments == 256
    r = holds_in_finite(identity("weak-right-commutativity"), A)
    assert not r.holds
    assert list(r.witness.values()) == ["e1", "e1", "e1", "e2"]
    assert r.value == quarter_e2
    assert holds_in_finite(identity("commutativity"), A).holds
    with pytest.raises(ValueError, match="finite check requires multilinear identity"):
        holds_in_finite(parse_magma("x*x"), A)


def test_algebra_json_roundtrip(tmp_path):
    data = A.to_json()
    assert FiniteAlgebra.from_json(data) == A
    f = tmp_path / "alg.json"
    f.write_text(json.dumps(data))
    assert load_algebra(str(f)) == A
    assert load_algebra("martin-A") == A


def test_associative_algebra_fails_bicom_identities():
    # 2x2 matrix units are associative but not left-commutative
    names = ["e11", "e12", "e21", "e22"]
    prods = {}
    for i, (p, q) in enumerate([(1, 1), (1, 2), (2, 1), (2, 2)], 1):
        for j, (r, s) in enumerate([(1, 1), (1, 2), (2, 1), (2, 2)], 1):
            if q == r:
                prods[(i, j)] = {f"e{p}{s}": 1}
    M = FiniteAlgebra.from_products(names, prods)
    assert holds_in_finite(parse_identity_poly("(a*b)*c = a*(b*c)"), M).holds
    assert not holds_in_finite(identity("left-commutativity"), M).holds


@given(st.permutations(["a", "b", "c", "d"]))
def test_renaming_preserves_truth(perm):
    p = identity("weak-right-commutativity")
    q = substitute(p, dict(zip("abcd", perm)))
    assert holds_in_bicom(q, "anti")
    assert not holds_in_finite(q, A).holds


def test_magma_poly_basics():
    p = parse_magma("x*(y*z) - 2*(x*y)*z")
    assert p.degree() == 3 and p.is_multilinear()
    assert p.variables() == ["x", "y", "z"]
    assert str(p) == "x*(y*z) - 2*x*y*z"
    assert not parse_magma("x + x*y").degree()
    assert (p - p).is_zero()
    assert MagmaPoly.var("x") * MagmaPoly.var("y") == parse_magma("x*y")
