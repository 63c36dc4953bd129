from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bicomlab import exactlin
from bicomlab.core import Element, plus_part
from bicomlab.exactlin import EchelonBasis, RationalMatrix, in_span, kernel, rank, rref, sparse_from
from bicomlab.parsing import parse_element

# rows: monomials, columns: lambda_1..lambda_7 of the degree-4 anticommutator system
IRR_PLUS = [
    [1, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0],
    [1, 0, 1, 1, 0, 1, 2],
    [1, 1, 0, 0, 1, 1, 2],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 1, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 1, 0, 0],
]
IRR_PLUS_MONOMIALS = ["((x*y)*z)*t", "y*((x*z)*t)", "z*((x*y)*t)", "t*((x*y)*z)",
                      "z*(y*(x*t))", "t*(y*(x*z))", "t*(z*(x*y))"]
IRR_PLUS_BRACKETS = ["{{{x,y},z},t}", "{{{x,z},y},t}", "{{{x,t},y},z}", "{{{y,z},x},t}",
                     "{{{y,t},x},z}", "{{{z,t},x},y}", "{{x,y},{z,t}}"]

small = st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5)


def test_small_ranks():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank(RationalMatrix([], 3)) == 0


def test_irr_plus_system_has_trivial_kernel():
    assert rank(IRR_PLUS) == 7
    assert kernel(IRR_PLUS) == []


def test_irr_plus_matrix_matches_expansion():
    monos = [plus_part(parse_element(m)) for m in IRR_PLUS_MONOMIALS]
    for j, b in enumerate(IRR_PLUS_BRACKETS):
        expect = sum((monos[i].scale(IRR_PLUS[i][j]) for i in range(7)), Element())
        assert parse_element(b) == expect, b


def test_rref_and_kernel_example():
    M = [[1, 2, 3], [2, 4, 7]]
    red, piv = rref(M)
    assert piv == [0, 2]
    assert red == [[1, 2, 0], [0, 0, 1]]
    assert kernel(M) == [(Fraction(-2), Fraction(1), Fraction(0))]


def test_in_span_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        in_span([1, 2], [[1, 2, 3]])


def test_ragged():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])


@given(small)
def test_rank_nullity(M):
    assert rank(M) + len(kernel(M)) == 4
    for v in kernel(M):
        assert all(x == 0 for x in exactlin.mat_vec(M, v))


@given(small, st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_in_span_criterion(M, v):
    assert in_span(v, M) == (rank(M + [v]) == rank(M))


@given(small)
def test_echelon_basis_agrees_with_dense(M):
    eb = EchelonBasis(4)
    for r in M:
        eb.add(sparse_from(r))
    assert eb.rank == rank(M)
    for r in M:
        assert eb.contains(sparse_from(r))
    assert exactlin.same_row_space(eb.to_matrix(), M) or eb.rank == 0


@given(st.lists(st.fractions(max_denominator=7), min_size=3, max_size=3))
def test_sparse_from_is_primitive(v):
    row = sparse_from(v)
    if row:
        assert row[max(row)] > 0
        from math import gcd
        from functools import reduce
        assert reduce(gcd, row.values()) == 1
