"""Free bicommutative algebra: canonical basis words and exact arithmetic.

A monomial of degree >= 2 is determined by two multisets of generators:
the generators that occur as the left factor of some product (the
*column*) and those that occur as a right factor (the *row*).  The word
``Pair(col, row)`` stands for the monomial

    c_k(...(c_2(((c_1 r_1) r_2)...r_l))...)

with ``c_1 <= ... <= c_k`` and ``r_1 <= ... <= r_l``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def check_name(name: str) -> str:
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise ValueError(f"invalid generator name {name!r}")
    return name


@dataclass(frozen=True)
class Gen:
    name: str

    def __post_init__(self):
        check_name(self.name)

    @property
    def degree(self) -> int:
        return 1

    def letters(self) -> tuple[str, ...]:
        return (self.name,)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Pair:
    col: tuple[str, ...]
    row: tuple[str, ...]

    def __post_init__(self):
        col = tuple(sorted(self.col))
        row = tuple(sorted(self.row))
        if not col or not row:
            raise ValueError("column and row of a basis word must be nonempty")
        for name in col + row:
            check_name(name)
        object.__setattr__(self, "col", col)
        object.__setattr__(self, "row", row)

    @property
    def degree(self) -> int:
        return len(self.col) + len(self.row)

    def letters(self) -> tuple[str, ...]:
        return self.col + self.row

    def __str__(self):
        return "Y[" + ",".join(self.col) + "|" + ",".join(self.row) + "]"


Word = Union[Gen, Pair]


def word_key(w: Word):
    """Deterministic basis order: pairs by (|col|, col, row), generators last."""
    if isinstance(w, Pair):
        return (0, len(w.col), w.col, w.row)
    return (1, 0, (w.name,), ())


def word_product(u: Word, v: Word) -> Word:
    # a generator on the left joins the column, on the right joins the row
    if isinstance(u, Gen):
        col, row = (u.name,), ()
    else:
        col, row = u.col, u.row
    if isinstance(v, Gen):
        row = row + (v.name,)
    else:
        col, row = col + v.col, row + v.row
    return Pair(col, row)


def involute_word(w: Word) -> Word:
    if isinstance(w, Gen):
        return w
    return Pair(w.row, w.col)


Scalar = Union[int, Fraction]


class Element:
    """An element of the free bicommutative algebra.

    ``terms`` maps basis words to nonzero rational coefficients.  Elements
    are immutable; arithmetic returns new elements.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            if not isinstance(w, (Gen, Pair)):
                raise TypeError(f"not a basis word: {w!r}")
            acc[w] = acc.get(w, 0) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "Element":
        e = cls.__new__(cls)
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def gen(cls, name: str) -> "Element":
        return cls._raw({Gen(name): Fraction(1)})

    @classmethod
    def word(cls, w: Word, coeff: Scalar = 1) -> "Element":
        return cls({w: coeff})

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return self._terms

    def items(self):
        """Terms in the deterministic basis order."""
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Element):
            if other == 0:
                return self
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w, 0) + c
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
        return Element._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            if other == 0:
                return self
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if other == 0:
            return -self
        return NotImplemented

    def scale(self, k: Scalar) -> "Element":
        k = Fraction(k)
        if k == 0:
            return Element()
        return Element._raw({w: c * k for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


def gen(name: str) -> Element:
    return Element.gen(name)


def gens(names: str) -> tuple[Element, ...]:
    """``gens("x y z")`` -> three generator elements."""
    return tuple(Element.gen(n) for n in names.replace(",", " ").split())


def multiply(f: Element, g: Element) -> Element:
    acc: dict[Word, Fraction] = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = word_product(u, v)
            s = acc.get(w, 0) + a * b
            if s:
                acc[w] = s
            else:
                acc.pop(w, None)
    return Element._raw(acc)


def involute(f: Element) -> Element:
    return Element._raw({involute_word(w): c for w, c in f.terms.items()})


def plus_part(f: Element) -> Element:
    return f + involute(f)


def minus_part(f: Element) -> Element:
    return f - involute(f)


def is_symmetric(f: Element) -> bool:
    return involute(f) == f


def is_skew_symmetric(f: Element) -> bool:
    return involute(f) == -f


def multidegree(f: Element) -> dict[str, int] | None:
    """Generator counts shared by every term, or None if f is inhomogeneous.

    The zero element has the empty multidegree.
    """
    md = None
    for w in f.terms:
        c = Counter(w.letters())
        if md is None:
            md = c
        elif c != md:
            return None
    return dict(md) if md is not None else {}


def is_multilinear(f: Element) -> bool:
    md = multidegree(f)
    return md is not None and all(v == 1 for v in md.values())


def _as_letters(md: Mapping[str, int] | Iterable[str]) -> tuple[str, ...]:
    if isinstance(md, Mapping):
        letters = []
        for name, k in md.items():
            check_name(name)
            if k < 0:
                raise ValueError(f"negative count for {name}")
            letters += [name] * k
        return tuple(sorted(letters))
    return tuple(sorted(check_name(x) for x in md))


def sub_multisets(letters: tuple[str, ...]):
    """All sub-multisets of a sorted tuple, each as a (chosen, rest) pair."""
    counts = sorted(Counter(letters).items())
    for picks in itertools.product(*(range(k + 1) for _, k in counts)):
        chosen, rest = [], []
        for (name, k), p in zip(counts, picks):
            chosen += [name] * p
            rest += [name] * (k - p)
        yield tuple(chosen), tuple(rest)


def enumerate_basis(md: Mapping[str, int] | Iterable[str]) -> list[Word]:
    letters = _as_letters(md)
    if not letters:
        raise ValueError("empty multidegree")
    if len(letters) == 1:
        return [Gen(letters[0])]
    words = [Pair(col, row) for col, row in sub_multisets(letters) if col and row]
    words.sort(key=word_key)
    return words


def multilinear_letters(n: int, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def coordinates(f: Element, basis: list[Word]) -> list[Fraction]:
    """Coefficient vector of f against an explicit word list (must cover f)."""
    index = {w: i for i, w in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for w, c in f.terms.items():
        try:
            vec[index[w]] = c
        except KeyError:
            raise ValueError(f"{w} is not in the given basis") from None
    return vec


# -- text and JSON forms ---------------------------------------------------


def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_linear(items: Iterable[tuple[str, Fraction]]) -> str:
    """Signed sum ``a - 3/2*b + c`` from (text, coefficient) pairs."""
    out = []
    for text, c in items:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = text if mag == 1 else f"{format_coeff(mag)}*{text}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


def format_element(f: Element) -> str:
    return format_linear((str(w), c) for w, c in f.items())


def element_to_json(f: Element) -> dict:
    terms = []
    for w, c in f.items():
        if isinstance(w, Gen):
            terms.append({"coeff": format_coeff(c), "gen": w.name})
        else:
            terms.append({"coeff": format_coeff(c), "col": list(w.col), "row": list(w.row)})
    return {"terms": terms}


def element_from_json(data: Mapping) -> Element:
    acc = []
    for t in data["terms"]:
        c = Fraction(t["coeff"])
        w = Gen(t["gen"]) if "gen" in t else Pair(tuple(t["col"]), tuple(t["row"]))
        acc.append((w, c))
    return Element(acc)
