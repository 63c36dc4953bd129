"""Brute-force ground truth for the free bicommutative algebra.

Magma words are plain nested tuples: a leaf is a generator name (``str``),
a product is a 2-tuple ``(left, right)``.  The two defining identities

    a(bc) = b(ac)        (ab)c = (ac)b

send monomials to monomials, so the quotient of the free magma has a
basis of equivalence classes.  We compute those classes by exhaustive
rewriting, without using the closed product rule in :mod:`bicomlab.core`.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import lru_cache
from typing import Mapping, Union

from .core import Gen, Pair, Word, _as_letters, sub_multisets, word_product
from .report import Report

MagmaWord = Union[str, tuple]

DEFAULT_BOUND = 7


class OracleError(RuntimeError):
    pass


def degree(w: MagmaWord) -> int:
    if isinstance(w, str):
        return 1
    return degree(w[0]) + degree(w[1])


def leaves(w: MagmaWord) -> list[str]:
    if isinstance(w, str):
        return [w]
    return leaves(w[0]) + leaves(w[1])


def format_word(w: MagmaWord) -> str:
    """Left-associative text: ``((ab)c)d`` prints as ``a*b*c*d``."""
    if isinstance(w, str):
        return w
    left, right = w
    r = format_word(right)
    if not isinstance(right, str):
        r = f"({r})"
    return f"{format_word(left)}*{r}"


@lru_cache(maxsize=None)
def _words(letters: tuple[str, ...]) -> tuple:
    if len(letters) == 1:
        return (letters[0],)
    out = []
    for left, right in sub_multisets(letters):
        if not left or not right:
            continue
        for lw in _words(left):
            for rw in _words(right):
                out.append((lw, rw))
    return tuple(out)


def all_words(md) -> tuple:
    """Every bracketing of every arrangement of the given leaf multiset."""
    letters = _as_letters(md)
    if not letters:
        raise ValueError("empty multidegree")
    return _words(letters)


def neighbours(w: MagmaWord):
    """Words reachable by one application of either rule at any subterm.

    Both rules are involutions, so the rewrite graph is undirected.
    """
    if isinstance(w, str):
        return
    left, right = w
    if not isinstance(right, str):
        b, c = right
        yield (b, (left, c))
    if not isinstance(left, str):
        a, b = left
        yield ((a, right), b)
    for nl in neighbours(left):
        yield (nl, right)
    for nr in neighbours(right):
        yield (left, nr)


def _check_bound(n: int, bound: int):
    if n > bound:
        raise OracleError(f"oracle degree limit: degree {n} exceeds bound {bound}")


def closure_classes(md, bound: int = DEFAULT_BOUND) -> list[list]:
    """Equivalence classes of all words with the given leaf multiset."""
    letters = _as_letters(md)
    _check_bound(len(letters), bound)
    return [list(c) for c in _classes(letters)]


@lru_cache(maxsize=None)
def _classes(letters: tuple[str, ...]) -> tuple:
    seen = set()
    classes = []
    for start in _words(letters):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        members = []
        while queue:
            w = queue.popleft()
            members.append(w)
            for v in neighbours(w):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        classes.append(tuple(members))
    return tuple(classes)


def pattern_word(w: Word) -> MagmaWord:
    """The defining bracketing of a basis word."""
    if isinstance(w, Gen):
        return w.name
    t: MagmaWord = w.col[0]
    for y in w.row:
        t = (t, y)
    for x in w.col[1:]:
        t = (x, t)
    return t


def parse_pattern(t: MagmaWord) -> Word | None:
    """Inverse of :func:`pattern_word`; None if t is not a defining bracketing."""
    if isinstance(t, str):
        return Gen(t)
    outer = []
    while isinstance(t, tuple) and isinstance(t[0], str) and isinstance(t[1], tuple):
        outer.append(t[0])
        t = t[1]
    row = []
    while isinstance(t, tuple):
        if not isinstance(t[1], str):
            return None
        row.append(t[1])
        t = t[0]
    row.reverse()
    col = [t] + outer[::-1]
    if col != sorted(col) or row != sorted(row) or not row:
        return None
    return Pair(tuple(col), tuple(row))


@lru_cache(maxsize=None)
def _canonical_table(letters: tuple[str, ...]) -> dict:
    table = {}
    for members in _classes(letters):
        found = [p for p in map(parse_pattern, members) if p is not None]
        if len(found) != 1:
            raise OracleError(
                f"oracle/basis mismatch: class of {format_word(members[0])} "
                f"has {len(found)} defining bracketings"
            )
        for m in members:
            table[m] = found[0]
    return table


def oracle_canonical(w: MagmaWord, bound: int = DEFAULT_BOUND) -> Word:
    letters = tuple(sorted(leaves(w)))
    _check_bound(len(letters), bound)
    return _canonical_table(letters)[w]


def words_up_to(names, max_degree: int) -> dict[int, list]:
    """All magma words over ``names`` grouped by degree 1..max_degree."""
    names = sorted(names)
    by_degree = {1: list(names)}
    for d in range(2, max_degree + 1):
        out = []
        for k in range(1, d):
            for left in by_degree[k]:
                for right in by_degree[d - k]:
                    out.append((left, right))
        by_degree[d] = out
    return by_degree


def verify_class_counts(n: int, bound: int = DEFAULT_BOUND) -> Report:
    """Multilinear degree-n class count against the Young-pair basis size."""
    from .core import enumerate_basis, multilinear_letters

    letters = multilinear_letters(n)
    classes = closure_classes(letters, bound)
    basis = enumerate_basis(letters)
    _canonical_table(tuple(sorted(letters)))  # raises on a class without exactly one pattern
    ok = len(classes) == len(basis)
    return Report("oracle-classes", n, ok, {"words": len(all_words(letters)),
                                            "classes": len(classes), "basis": len(basis)})


def verify_product_rule(max_degree: int, names=("x", "y", "z"),
                        bound: int = DEFAULT_BOUND) -> Report:
    """Check word_product against the oracle for every pair of words with
    total degree <= max_degree over the given generators."""
    _check_bound(max_degree, bound)
    by_degree = words_up_to(names, max_degree - 1)
    pairs = mismatches = 0
    first = None
    for du in range(1, max_degree):
        for dv in range(1, max_degree - du + 1):
            for u in by_degree[du]:
                cu = oracle_canonical(u, bound)
                for v in by_degree[dv]:
                    pairs += 1
                    if word_product(cu, oracle_canonical(v, bound)) != oracle_canonical((u, v), bound):
                        mismatches += 1
                        first = first or (format_word(u), format_word(v))
    details = {"pairs": pairs, "mismatches": mismatches}
    if first:
        details["first_mismatch"] = list(first)
    return Report("oracle-product-rule", max_degree, mismatches == 0, details)


def class_count(md: Mapping[str, int], bound: int = DEFAULT_BOUND) -> int:
    return len(closure_classes(md, bound))


def leaf_multidegree(w: MagmaWord) -> dict[str, int]:
    return dict(Counter(leaves(w)))
