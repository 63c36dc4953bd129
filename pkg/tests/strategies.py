"""Hypothesis strategies for elements, bracket combinations and expression text."""

from hypothesis import strategies as st

from bicomlab.core import Element, Gen, Pair, enumerate_basis, multilinear_letters
from bicomlab.operators import BracketSum, metabelian_trees

NAMES = ("a", "b", "c", "x", "y", "z")

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
nonzero_rationals = rationals.filter(bool)


@st.composite
def words(draw, names=NAMES, max_degree=5):
    letters = draw(st.lists(st.sampled_from(names), min_size=1, max_size=max_degree))
    if len(letters) == 1:
        return Gen(letters[0])
    k = draw(st.integers(1, len(letters) - 1))
    letters = draw(st.permutations(letters))
    return Pair(tuple(letters[:k]), tuple(letters[k:]))


@st.composite
def elements(draw, names=NAMES, max_degree=5, max_terms=5):
    ws = draw(st.lists(words(names, max_degree), max_size=max_terms))
    return Element([(w, draw(rationals)) for w in ws])


@st.composite
def multilinear_elements(draw, min_n=2, max_n=5, max_terms=6):
    n = draw(st.integers(min_n, max_n))
    basis = enumerate_basis(multilinear_letters(n))
    picked = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=max_terms))
    return Element([(w, draw(rationals)) for w in picked])


@st.composite
def metabelian_combinations(draw, min_n=2, max_n=5):
    """A random rational combination of left-normed metabelian basis brackets."""
    n = draw(st.integers(min_n, max_n))
    trees = metabelian_trees(multilinear_letters(n))
    coeffs = draw(st.lists(rationals, min_size=len(trees), max_size=len(trees)))
    return BracketSum(zip(trees, coeffs))


@st.composite
def expressions(draw, names=("x", "y", "z", "t"), max_degree=5):
    """Surface-syntax text of a random expression of degree at most max_degree."""

    def split(d, k):
        cuts = sorted(draw(st.lists(st.integers(1, d - 1), min_size=k - 1, max_size=k - 1, unique=True)))
        bounds = [0] + cuts + [d]
        return [b - a for a, b in zip(bounds, bounds[1:])]

    def atom(d):
        if d == 1:
            return draw(st.sampled_from(names))
        kinds = ["mul", "com", "anti", "paren"] + (["assoc"] if d >= 3 else [])
        kind = draw(st.sampled_from(kinds))
        if kind == "assoc":
            return "assoc(" + ",".join(atom(k) for k in split(d, 3)) + ")"
        a, b = (atom(k) for k in split(d, 2))
        if kind == "com":
            return f"[{a},{b}]"
        if kind == "anti":
            return "{" + f"{a},{b}" + "}"
        if kind == "paren":
            return f"({a}*{b})"
        return f"{a}*{b}"

    text = ""
    for i in range(draw(st.integers(1, 3))):
        body = atom(draw(st.integers(1, max_degree)))
        c = draw(nonzero_rationals)
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        if i == 0:
            text = ("-" if c < 0 else "") + coef + body
        else:
            text += f" {'-' if c < 0 else '+'} {coef}{body}"
    return text
