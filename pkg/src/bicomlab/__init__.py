"""Computations in free bicommutative algebras over the rationals."""

from .core import (Element, Gen, Pair, enumerate_basis, gen, gens, involute, is_multilinear,
                   is_skew_symmetric, is_symmetric, minus_part, multidegree, multiply, plus_part)
from .operators import (BracketSum, Product, anticommutator, associator, commutator, dynkin, head,
                        is_jordan, is_lie, jordan_express, left_normed, lie_expansion_rhs,
                        lie_express, tail)
from .magma import FiniteAlgebra, MagmaPoly, eval_bicom, holds_in_bicom, holds_in_finite, martin_algebra
from .parsing import ParseError, parse_element, parse_identity_poly, parse_magma
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "Element", "Gen", "Pair", "enumerate_basis", "gen", "gens", "involute", "is_multilinear",
    "is_skew_symmetric", "is_symmetric", "minus_part", "multidegree", "multiply", "plus_part",
    "BracketSum", "Product", "anticommutator", "associator", "commutator", "dynkin", "head",
    "is_jordan", "is_lie", "jordan_express", "left_normed", "lie_expansion_rhs", "lie_express", "tail",
    "FiniteAlgebra", "MagmaPoly", "eval_bicom", "holds_in_bicom", "holds_in_finite", "martin_algebra",
    "ParseError", "parse_element", "parse_identity_poly", "parse_magma", "Report",
]
