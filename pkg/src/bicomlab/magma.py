"""Nonassociative polynomials and their evaluation.

A :class:`MagmaPoly` is a rational combination of magma words (see
:mod:`bicomlab.oracle` for the tuple encoding).  It has a single binary
operation; which concrete product that operation denotes is chosen at
evaluation time.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .core import Element, check_name, format_coeff, format_linear
from .operators import Product, apply_product
from .oracle import MagmaWord, format_word, leaves


class MagmaPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MagmaWord, Fraction] | Iterable[tuple[MagmaWord, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def var(cls, name: str) -> "MagmaPoly":
        return cls({check_name(name): 1})

    @classmethod
    def word(cls, w: MagmaWord, coeff=1) -> "MagmaPoly":
        return cls({w: coeff})

    def __add__(self, other: "MagmaPoly") -> "MagmaPoly":
        return MagmaPoly(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return MagmaPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "MagmaPoly") -> "MagmaPoly":
        return self + (-other)

    def scale(self, k) -> "MagmaPoly":
        return MagmaPoly({w: c * Fraction(k) for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MagmaPoly):
            return MagmaPoly(((u, v), a * b) for u, a in self.terms.items() for v, b in other.terms.items())
        return self.scale(other)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        return isinstance(other, MagmaPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> list[str]:
        return sorted({v for w in self.terms for v in leaves(w)})

    def degree(self) -> int | None:
        degs = {len(leaves(w)) for w in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_multilinear(self) -> bool:
        if not self.terms:
            return True
        names = self.variables()
        for w in self.terms:
            ls = leaves(w)
            if len(ls) != len(names) or len(set(ls)) != len(ls):
                return False
        return True

    def components(self) -> dict[tuple, "MagmaPoly"]:
        """Multihomogeneous components keyed by sorted leaf multiset."""
        parts: dict = {}
        for w, c in self.terms.items():
            key = tuple(sorted(Counter(leaves(w)).items()))
            parts.setdefault(key, {})[w] = c
        return {k: MagmaPoly(v) for k, v in parts.items()}

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: format_word(kv[0]))

    def __str__(self):
        return format_linear((format_word(w), c) for w, c in self.items())

    def __repr__(self):
        return f"MagmaPoly({str(self)!r})"


def substitute_word(w: MagmaWord, sigma: Mapping[str, MagmaWord]) -> MagmaWord:
    if isinstance(w, str):
        try:
            return sigma[w]
        except KeyError:
            raise KeyError(f"unmapped variable {w!r}") from None
    return (substitute_word(w[0], sigma), substitute_word(w[1], sigma))


def substitute(p: MagmaPoly, sigma: Mapping[str, MagmaWord]) -> MagmaPoly:
    return MagmaPoly((substitute_word(w, sigma), c) for w, c in p.terms.items())


def eval_bicom(p: MagmaPoly, product: Product | str = Product.PLAIN,
               sigma: Mapping[str, Element] | None = None) -> Element:
    """Evaluate p in the free bicommutative algebra.

    Each product node is read as the chosen bilinear product.  Without
    sigma, every variable is sent to the generator of the same name.
    """
    product = Product(product)
    cache: dict = {}

    def ev(w):
        if w in cache:
            return cache[w]
        if isinstance(w, str):
            if sigma is None:
                r = Element.gen(w)
            elif w in sigma:
                r = sigma[w]
            else:
                raise KeyError(f"unmapped variable {w!r}")
        else:
            r = apply_product(product, ev(w[0]), ev(w[1]))
        cache[w] = r
        return r

    out = Element()
    for w, c in p.terms.items():
        out = out + ev(w).scale(c)
    return out


def holds_in_bicom(identity: MagmaPoly, product: Product | str = Product.PLAIN) -> bool:
    # Bicom(X) is relatively free and multigraded, so evaluating at the
    # generators decides every multihomogeneous component at once.
    return eval_bicom(identity, product).is_zero()


# -- finite-dimensional algebras ----------------------------------------------


@dataclass(frozen=True)
class FiniteAlgebra:
    """Structure constants: e_i e_j = sum_k table[i][j][k] e_k (0-based)."""

    dim: int
    basis: tuple[str, ...]
    table: tuple = field(repr=False)

    @classmethod
    def from_products(cls, basis: Sequence[str], products: Mapping[tuple[int, int], Mapping[str, Fraction]]):
        """Build from sparse 1-based products {(i, j): {basis name: coeff}}."""
        basis = tuple(basis)
        n = len(basis)
        if n < 1:
            raise ValueError("algebra dimension must be positive")
        pos = {b: k for k, b in enumerate(basis)}
        table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (i, j), out in products.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"product index ({i},{j}) out of range")
            for name, c in out.items():
                table[i - 1][j - 1][pos[name]] += Fraction(c)
        frozen = tuple(tuple(tuple(v) for v in row) for row in table)
        return cls(n, basis, frozen)

    @classmethod
    def from_json(cls, data: Mapping) -> "FiniteAlgebra":
        basis = data.get("basis") or [f"e{k}" for k in range(1, int(data["dim"]) + 1)]
        if "dim" in data and int(data["dim"]) != len(basis):
            raise ValueError("dim does not match basis length")
        products: dict = {}
        for p in data.get("products", []):
            key = (int(p["i"]), int(p["j"]))
            slot = products.setdefault(key, {})
            for name, c in p["out"].items():
                slot[name] = slot.get(name, 0) + Fraction(c)
        return cls.from_products(basis, products)

    def to_json(self) -> dict:
        products = []
        for i in range(self.dim):
            for j in range(self.dim):
                out = {self.basis[k]: format_coeff(c) for k, c in enumerate(self.table[i][j]) if c}
                if out:
                    products.append({"i": i + 1, "j": j + 1, "out": out})
        return {"dim": self.dim, "basis": list(self.basis), "products": products}

    def unit(self, k: int) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * self.dim
        v[k] = Fraction(1)
        return tuple(v)

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def format_vector(self, v: Sequence[Fraction]) -> str:
        return format_linear((self.basis[k], c) for k, c in enumerate(v) if c)


def martin_algebra() -> FiniteAlgebra:
    """The 4-dimensional commutative algebra with e1^2 = e1, e1e2 = e2e1 = e2/2."""
    half = Fraction(1, 2)
    return FiniteAlgebra.from_products(
        ("e1", "e2", "e3", "e4"),
        {(1, 1): {"e1": 1}, (1, 2): {"e2": half}, (2, 1): {"e2": half}},
    )


BUILTIN_ALGEBRAS = {"martin-A": martin_algebra}


def load_algebra(source: str) -> FiniteAlgebra:
    if source in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[source]()
    return FiniteAlgebra.from_json(json.loads(Path(source).read_text()))


def eval_finite(p: MagmaPoly, A: FiniteAlgebra, sigma: Mapping[str, Sequence]) -> tuple[Fraction, ...]:
    vecs = {}
    for name, v in sigma.items():
        if len(v) != A.dim:
            raise ValueError(f"dimension mismatch: {name} has length {len(v)}, algebra has dim {A.dim}")
        vecs[name] = tuple(Fraction(x) for x in v)
    cache: dict = {}

    def ev(w):
        if w in cache:
            return cache[w]
        if isinstance(w, str):
            if w not in vecs:
                raise KeyError(f"unmapped variable {w!r}")
            r = vecs[w]
        else:
            r = A.mul(ev(w[0]), ev(w[1]))
        cache[w] = r
        return r

    out = [Fraction(0)] * A.dim
    for w, c in p.terms.items():
        for k, x in enumerate(ev(w)):
            out[k] += c * x
    return tuple(out)


@dataclass
class FiniteCheck:
    holds: bool
    assignments: int
    witness: dict[str, str] | None = None
    value: tuple[Fraction, ...] | None = None


def holds_in_finite(identity: MagmaPoly, A: FiniteAlgebra) -> FiniteCheck:
    """Exhaustive check over basis-vector assignments (enough by multilinearity)."""
    if not identity.is_multilinear():
        raise ValueError("finite check requires multilinear identity")
    names = identity.variables()
    count = 0
    for choice in itertools.product(range(A.dim), repeat=len(names)):
        count += 1
        sigma = {v: A.unit(k) for v, k in zip(names, choice)}
        val = eval_finite(identity, A, sigma)
        if any(val):
            return FiniteCheck(False, count, {v: A.basis[k] for v, k in zip(names, choice)}, val)
    return FiniteCheck(True, count)
