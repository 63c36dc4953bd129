"""Derived products, the Dynkin map, head/tail, and the Lie/Jordan criteria.

Bracket expressions are trees whose leaves are generator names and whose
nodes are ``(op, left, right)`` with ``op`` one of ``"com"`` ([,]),
``"anti"`` ({,}) or ``"plain"`` (the algebra product).  A
:class:`BracketSum` is a rational combination of such trees.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .core import (
    Element,
    Gen,
    Pair,
    format_linear,
    involute,
    is_multilinear,
    multidegree,
    multiply,
)


class Product(str, enum.Enum):
    PLAIN = "plain"
    COM = "com"
    ANTI = "anti"


def commutator(f: Element, g: Element) -> Element:
    return multiply(f, g) - multiply(g, f)


def anticommutator(f: Element, g: Element) -> Element:
    return multiply(f, g) + multiply(g, f)


def apply_product(product: Product | str, f: Element, g: Element) -> Element:
    product = Product(product)
    if product is Product.PLAIN:
        return multiply(f, g)
    if product is Product.COM:
        return commutator(f, g)
    return anticommutator(f, g)


def associator(a: Element, b: Element, c: Element) -> Element:
    """Jordan associator {a,{b,c}} - {{a,b},c}."""
    return anticommutator(a, anticommutator(b, c)) - anticommutator(anticommutator(a, b), c)


# -- bracket expressions ---------------------------------------------------

Tree = Union[str, tuple]


def bracket(op: Product | str, left: Tree, right: Tree) -> Tree:
    op = Product(op).value
    if op == "anti" and _anti_key(right) < _anti_key(left):
        left, right = right, left
    return (op, left, right)


def tree_degree(t: Tree) -> int:
    return 1 if isinstance(t, str) else tree_degree(t[1]) + tree_degree(t[2])


def format_tree(t: Tree) -> str:
    if isinstance(t, str):
        return t
    op, left, right = t
    if op == "com":
        return f"[{format_tree(left)},{format_tree(right)}]"
    if op == "anti":
        return "{" + f"{format_tree(left)},{format_tree(right)}" + "}"
    return f"({format_tree(left)}*{format_tree(right)})"


def _anti_key(t: Tree):
    # {} is commutative; put the heavier argument first, ties by text
    return (-tree_degree(t), format_tree(t))


@lru_cache(maxsize=65536)
def evaluate_tree(t: Tree) -> Element:
    if isinstance(t, str):
        return Element.gen(t)
    op, left, right = t
    return apply_product(op, evaluate_tree(left), evaluate_tree(right))


class BracketSum:
    """Rational linear combination of bracket trees."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tree, Fraction] | Iterable[tuple[Tree, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Tree, Fraction] = {}
        for t, c in items:
            acc[t] = acc.get(t, 0) + Fraction(c)
        self.terms = {t: c for t, c in acc.items() if c}

    @classmethod
    def leaf(cls, name: str) -> "BracketSum":
        return cls({name: 1})

    def __add__(self, other: "BracketSum") -> "BracketSum":
        return BracketSum(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "BracketSum") -> "BracketSum":
        return self + other.scale(-1)

    def scale(self, k) -> "BracketSum":
        return BracketSum({t: c * Fraction(k) for t, c in self.terms.items()})

    def __rmul__(self, k):
        return self.scale(k)

    def combine(self, op: Product | str, other: "BracketSum") -> "BracketSum":
        return BracketSum((bracket(op, s, t), a * b)
                          for s, a in self.terms.items() for t, b in other.terms.items())

    def evaluate(self) -> Element:
        out = Element()
        for t, c in self.terms.items():
            out = out + evaluate_tree(t).scale(c)
        return out

    def ops(self) -> set[str]:
        found = set()

        def walk(t):
            if not isinstance(t, str):
                found.add(t[0])
                walk(t[1])
                walk(t[2])

        for t in self.terms:
            walk(t)
        return found

    def __eq__(self, other):
        return isinstance(other, BracketSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (-tree_degree(kv[0]), format_tree(kv[0])))

    def __str__(self):
        return format_linear((format_tree(t), c) for t, c in self.items())

    def __repr__(self):
        return f"BracketSum({str(self)!r})"


def left_normed_tree(op: Product | str, names: Sequence[str]) -> Tree:
    if len(names) < 2:
        raise ValueError("left-normed product needs at least 2 variables")
    t: Tree = names[0]
    for v in names[1:]:
        t = (Product(op).value, t, v)
    return t


def left_normed(product: Product | str, names: Sequence[str]) -> Element:
    return evaluate_tree(left_normed_tree(product, names))


# -- Dynkin map, head and tail ----------------------------------------------


@lru_cache(maxsize=None)
def dynkin_word(w) -> Element:
    if isinstance(w, Gen):
        return Element.gen(w.name)
    inner = Element.gen(w.col[0])
    for b in w.row:
        inner = commutator(inner, Element.gen(b))
    for a in w.col[1:]:
        inner = commutator(Element.gen(a), inner)
    return inner.scale(Fraction(1, 2))


def dynkin(f: Element) -> Element:
    out = Element()
    for w, c in f.terms.items():
        out = out + dynkin_word(w).scale(c)
    return out


def _require_multilinear(f: Element, what: str):
    if not is_multilinear(f):
        raise ValueError(f"{what} requires multilinear element")


def _in_head(w, x1: str) -> bool:
    if not isinstance(w, Pair):
        return False
    # x1 in the second box of a one-row diagram
    if len(w.col) == 1 and x1 in w.row:
        return True
    # x1 in the first column of a (2,1,...,1) diagram
    return len(w.row) == 1 and x1 in w.col


def head(f: Element) -> Element:
    if f.is_zero():
        return f
    _require_multilinear(f, "head")
    md = multidegree(f)
    if len(md) < 2:
        raise ValueError("head requires degree at least 2")
    x1 = min(md)
    return Element({w: c for w, c in f.terms.items() if _in_head(w, x1)})


def tail(f: Element) -> Element:
    return f - head(f)


# -- Jordan elements -----------------------------------------------------------


def is_jordan(f: Element) -> bool:
    return involute(f) == f


def _leaf_sum(name: str) -> BracketSum:
    return BracketSum.leaf(name)


def _anti(a: BracketSum, b: BracketSum) -> BracketSum:
    return a.combine("anti", b)


@lru_cache(maxsize=None)
def _plus_word(col: tuple[str, ...], row: tuple[str, ...]) -> BracketSum:
    """Jordan expression for Pair(col,row) + its conjugate."""
    if len(row) < len(col) or (len(row) == len(col) and row < col):
        col, row = row, col
    half = Fraction(1, 2)
    if len(col) >= 2:
        # peel the largest column entry; the correction has a shorter column
        a = col[-1]
        rest = col[:-1]
        main = _anti(_plus_word(rest, row), _leaf_sum(a))
        return main - _plus_word(rest, tuple(sorted(row + (a,))))
    a1 = col[0]
    n = 1 + len(row)
    if n == 2:
        return _anti(_leaf_sum(a1), _leaf_sum(row[0]))
    if n == 3:
        b, c = row
        la, lb, lc = _leaf_sum(a1), _leaf_sum(b), _leaf_sum(c)
        return (_anti(_anti(la, lb), lc).scale(half) + _anti(_anti(la, lc), lb).scale(half)
                - _anti(_anti(lb, lc), la).scale(half))
    # one-row diagram: peel the two largest row entries
    s, p, q = row[:-2], row[-2], row[-1]
    first = _anti(_plus_word(col, s + (p,)), _leaf_sum(q))
    second = _anti(_plus_word(col, s + (q,)), _leaf_sum(p))
    third = _anti(_plus_word(col, s), _anti(_leaf_sum(p), _leaf_sum(q)))
    return first.scale(half) + second.scale(half) - third.scale(Fraction(1, 4))


def jordan_express(f: Element) -> BracketSum:
    """Write a symmetric element with anticommutators only."""
    if not is_jordan(f):
        raise ValueError("not a Jordan element")
    out = BracketSum()
    done = set()
    for w, c in f.items():
        if w in done:
            continue
        if isinstance(w, Gen):
            out = out + BracketSum({w.name: c})
            continue
        done.add(w)
        done.add(Pair(w.row, w.col))
        piece = _plus_word(w.col, w.row)
        if w.col == w.row:
            # self-conjugate word: w = (w + w*)/2
            piece = piece.scale(Fraction(1, 2))
        out = out + piece.scale(c)
    if out.evaluate() != f:
        raise AssertionError("jordan_express failed to reproduce its input")
    return out


# -- Lie elements -----------------------------------------------------------------


def metabelian_trees(names: Sequence[str]) -> list[Tree]:
    """[[...[[x1,xi],x2],...],xn] for i = 2..n, remaining variables increasing."""
    names = sorted(names)
    if len(names) < 2:
        raise ValueError("need at least 2 variables")
    x1, rest = names[0], names[1:]
    out = []
    for xi in rest:
        others = [v for v in rest if v != xi]
        out.append(left_normed_tree("com", [x1, xi] + others))
    return out


def is_lie(f: Element) -> bool:
    if f.is_zero():
        return True
    _require_multilinear(f, "is_lie")
    if len(multidegree(f)) == 1:
        return True
    return dynkin(head(f)) == f


def lie_express(f: Element) -> BracketSum:
    """Coordinates of a multilinear Lie element in the metabelian basis.

    Each basis bracket [[x1,xi],...] owns exactly one hook word
    Pair(all but xi | xi) in its expansion, with coefficient +1 for even
    degree and -1 for odd degree; the coefficients are read off there.
    """
    if f.is_zero():
        return BracketSum()
    if not is_lie(f):
        raise ValueError("not a Lie element")
    md = multidegree(f)
    names = sorted(md)
    if len(names) == 1:
        (w, c), = f.terms.items()
        return BracketSum({w.name: c})
    sign = 1 if len(names) % 2 == 0 else -1
    h = head(f)
    out = BracketSum()
    for xi, t in zip(names[1:], metabelian_trees(names)):
        hook = Pair(tuple(v for v in names if v != xi), (xi,))
        lam = sign * h.coeff(hook)
        if lam:
            out = out + BracketSum({t: lam})
    if out.evaluate() != f:
        raise AssertionError("lie_express failed to reproduce its input")
    return out


def lie_expansion_rhs(names: Sequence[str]) -> Element:
    """Closed form of the left-normed commutator [[...[a1,a2],...],an].

    Alternating sum over subsets S of {a3..an} of the conjugation-(anti)
    symmetrised words Pair({a1} + S | {a2} + rest), with sign (-1)^|S|;
    symmetric parts for odd n, skew parts for even n.
    """
    names = list(names)
    if len(names) < 2:
        raise ValueError("need at least 2 variables")
    if len(set(names)) != len(names):
        raise ValueError("variables must be distinct")
    a1, a2, tail_vars = names[0], names[1], names[2:]
    odd = len(names) % 2 == 1
    out: dict = {}
    m = len(tail_vars)
    for mask in range(1 << m):
        chosen = [tail_vars[i] for i in range(m) if mask >> i & 1]
        others = [tail_vars[i] for i in range(m) if not mask >> i & 1]
        sign = -1 if len(chosen) % 2 else 1
        w = Pair(tuple([a1] + chosen), tuple([a2] + others))
        ws = Pair(w.row, w.col)
        out[w] = out.get(w, 0) + sign
        out[ws] = out.get(ws, 0) + (sign if odd else -sign)
    return Element(out)
