"""Multilinear identities: consequence spans, evaluation kernels, verifiers.

Coordinates live in a :class:`MultilinearSpace`: the multilinear magma
monomials of degree n on ``x1..xn``, optionally folded by commutativity
(``symmetry="com"``) or anticommutativity (``symmetry="anti"``).  Folding
identifies a monomial with every child-swap of it, up to sign for
``"anti"``.  The folded-away part is exactly the span of the
(anti)commutativity consequences, so dimensions of spans that contain it
are ``space.folded_dim + rank``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from . import exactlin
from .core import Element, coordinates, enumerate_basis, is_symmetric, is_skew_symmetric, multilinear_letters
from .exactlin import EchelonBasis, sparse_from
from .identities import THEOREM1_GENERATORS, THEOREM2_GENERATORS, identity
from .magma import MagmaPoly, eval_bicom, holds_in_finite, martin_algebra, substitute
from .operators import Product, bracket, evaluate_tree, metabelian_trees
from .oracle import all_words
from .parsing import parse_element
from .report import Report

DEFAULT_BOUND = 6


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def magma_dim(n: int) -> int:
    """Number of multilinear magma monomials of degree n."""
    return factorial(n) * catalan(n - 1)


@lru_cache(maxsize=None)
def _key(t):
    if isinstance(t, str):
        return (0, t)
    return (1, _key(t[0]), _key(t[1]))


@lru_cache(maxsize=None)
def _fold(t, anti: bool):
    """Canonical child order; returns (sign, tree), sign 0 if the word dies."""
    if isinstance(t, str):
        return 1, t
    sl, left = _fold(t[0], anti)
    sr, right = _fold(t[1], anti)
    sign = sl * sr
    if sign == 0:
        return 0, None
    if left == right:
        return (0, None) if anti else (sign, (left, right))
    if _key(right) < _key(left):
        left, right = right, left
        if anti:
            sign = -sign
    return sign, (left, right)


def _unordered_trees(names: tuple[str, ...]) -> list:
    if len(names) == 1:
        return [names[0]]
    first, rest = names[0], names[1:]
    out = []
    for r in range(0, len(rest)):
        for chosen in itertools.combinations(rest, r):
            left = (first,) + chosen
            right = tuple(v for v in rest if v not in chosen)
            for lt in _unordered_trees(left):
                for rt in _unordered_trees(right):
                    out.append(_fold((lt, rt), False)[1])
    return out


def _rename(t, mapping):
    if isinstance(t, str):
        return mapping.get(t, t)
    return (_rename(t[0], mapping), _rename(t[1], mapping))


class MultilinearSpace:
    def __init__(self, n: int, symmetry: str | None = None):
        if symmetry not in (None, "com", "anti"):
            raise ValueError(f"unknown symmetry {symmetry!r}")
        if n < 1:
            raise ValueError("degree must be positive")
        self.n = n
        self.symmetry = symmetry
        self.names = multilinear_letters(n)
        if symmetry is None:
            monos = list(all_words(self.names))
        else:
            monos = _unordered_trees(self.names)
        self.monomials = sorted(monos, key=_key)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    @property
    def full_dim(self) -> int:
        return magma_dim(self.n)

    @property
    def folded_dim(self) -> int:
        return self.full_dim - len(self.monomials)

    def locate(self, t) -> tuple[int, int | None]:
        if self.symmetry is None:
            return 1, self.index[t]
        sign, c = _fold(t, self.symmetry == "anti")
        if sign == 0:
            return 0, None
        return sign, self.index[c]

    def coords(self, p: MagmaPoly) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for w, c in p.terms.items():
            sign, j = self.locate(w)
            if sign:
                out[j] = out.get(j, 0) + sign * c
        return {j: c for j, c in out.items() if c}

    def row(self, p: MagmaPoly) -> dict[int, int]:
        return sparse_from(self.coords(p))

    def poly(self, row) -> MagmaPoly:
        return MagmaPoly((self.monomials[j], c) for j, c in row.items())


@lru_cache(maxsize=None)
def space(n: int, symmetry: str | None = None) -> MultilinearSpace:
    return MultilinearSpace(n, symmetry)


class Subspace:
    """A span inside a MultilinearSpace, stored as an echelon basis."""

    def __init__(self, space: MultilinearSpace, basis: EchelonBasis, label: str = ""):
        self.space = space
        self.basis = basis
        self.label = label

    @property
    def rank(self) -> int:
        """Dimension inside the (possibly folded) coordinate space."""
        return self.basis.rank

    @property
    def dim(self) -> int:
        """Dimension in the unfolded multilinear magma space."""
        return self.space.folded_dim + self.basis.rank

    @property
    def codim(self) -> int:
        return len(self.space) - self.basis.rank

    def contains_poly(self, p: MagmaPoly) -> bool:
        return self.basis.contains(self.space.row(p))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.basis.contains(r) for r in other.basis.rows())

    def equals(self, other: "Subspace") -> bool:
        self._check(other)
        return self.dim == other.dim and self.contains(other) and other.contains(self)

    def _check(self, other):
        if (self.space.n, self.space.symmetry) != (other.space.n, other.space.symmetry):
            raise ValueError("subspaces live in different coordinate spaces")


# -- consequence spans -------------------------------------------------------------


def _symmetry_of(g: MagmaPoly) -> str | None:
    if g.degree() != 2 or not g.is_multilinear() or len(g.terms) != 2:
        return None
    (u, a), (v, b) = g.terms.items()
    if u != (v[1], v[0]):
        return None
    if a == -b:
        return "com"
    if a == b:
        return "anti"
    return None


def _stage_operations(k: int, symmetry: str | None):
    """Maps taking a degree-k monomial to degree-(k+1) monomials.

    Multiplication by the new variable on either side, and replacement of
    one variable by its product with the new variable; under folding the
    two orders coincide up to sign, so only one is kept.
    """
    new = f"x{k + 1}"
    ops = [lambda t: (t, new)]
    if symmetry is None:
        ops.append(lambda t: (new, t))
    for i in range(1, k + 1):
        v = f"x{i}"
        ops.append(lambda t, v=v: _rename(t, {v: (v, new)}))
        if symmetry is None:
            ops.append(lambda t, v=v: _rename(t, {v: (new, v)}))
    return ops


def _lift_tables(k: int, symmetry: str | None):
    src, dst = space(k, symmetry), space(k + 1, symmetry)
    new = f"x{k + 1}"
    relabels = [{}] + [{f"x{j}": new, new: f"x{j}"} for j in range(1, k + 1)]
    tables = []
    for op in _stage_operations(k, symmetry):
        images = [op(m) for m in src.monomials]
        for mapping in relabels:
            tables.append([dst.locate(_rename(t, mapping)) for t in images])
    return tables


def _lift_row(row, table):
    out: dict[int, int] = {}
    for j, c in row.items():
        sign, idx = table[j]
        if sign:
            v = out.get(idx, 0) + sign * c
            if v:
                out[idx] = v
            else:
                del out[idx]
    return out


def _instances(g: MagmaPoly, names: Sequence[str]):
    """g under every bijection of its variables onto ``names``."""
    vs = g.variables()
    for perm in itertools.permutations(names):
        yield substitute(g, dict(zip(vs, perm)))


def consequence_span(generators: Iterable[MagmaPoly], n: int, full: bool = False) -> Subspace:
    """Degree-n multilinear part of the T-ideal generated by ``generators``.

    Built degree by degree: the degree-k part is spanned by the variable
    permutations of the degree-k generators and of the images of the
    degree-(k-1) part under the stage operations.  A commutativity or
    anticommutativity generator is applied by folding the coordinate space
    unless ``full`` is set, in which case it is treated like any other.
    """
    gens = list(generators)
    for g in gens:
        if not g.is_multilinear():
            raise ValueError("consequence generators must be multilinear")
        if g.degree() is None and not g.is_zero():
            raise ValueError("consequence generators must be homogeneous")
    symmetry = None
    if not full:
        kinds = {_symmetry_of(g) for g in gens} - {None}
        if len(kinds) == 1:
            symmetry = kinds.pop()
            gens = [g for g in gens if _symmetry_of(g) is None]
    by_degree: dict[int, list[MagmaPoly]] = {}
    for g in gens:
        if not g.is_zero() and g.degree() <= n:
            by_degree.setdefault(g.degree(), []).append(g)
    prev: EchelonBasis | None = None
    for k in range(1, n + 1):
        sp = space(k, symmetry)
        eb = EchelonBasis(len(sp))
        if prev is not None and prev.rank:
            tables = _lift_tables(k - 1, symmetry)
            rows = prev.rows()
            for table in tables:
                for r in rows:
                    eb.add(_lift_row(r, table))
        for g in by_degree.get(k, []):
            for inst in _instances(g, sp.names):
                eb.add(sp.row(inst))
        prev = eb
    return Subspace(space(n, symmetry), prev, "consequences")


# -- evaluation kernels -------------------------------------------------------------

_FOLD_FOR = {Product.COM: "anti", Product.ANTI: "com", Product.PLAIN: None}


def _to_bracket(t, op):
    if isinstance(t, str):
        return t
    return (op, _to_bracket(t[0], op), _to_bracket(t[1], op))


@lru_cache(maxsize=None)
def evaluation_matrix(n: int, product: Product | str, symmetry: str | None):
    """Rows: monomials of the space; columns: multilinear Bicom basis words."""
    product = Product(product)
    sp = space(n, symmetry)
    basis = enumerate_basis(sp.names)
    rows = [coordinates(evaluate_tree(_to_bracket(m, product.value)), basis) for m in sp.monomials]
    return exactlin.RationalMatrix(rows, len(basis))


class EvaluationKernel(Subspace):
    def __init__(self, space, basis, image_rank, matrix):
        super().__init__(space, basis, "kernel")
        self.image_rank = image_rank
        self.matrix = matrix


def evaluation_kernel(n: int, product: Product | str, full: bool = False) -> EvaluationKernel:
    """Kernel of the map sending a multilinear monomial to its value in Bicom."""
    product = Product(product)
    if n < 1:
        raise ValueError("degree must be positive")
    symmetry = None if full else _FOLD_FOR[product]
    sp = space(n, symmetry)
    M = evaluation_matrix(n, product, symmetry)
    MT = M.transpose()
    eb = EchelonBasis(len(sp))
    vectors = exactlin.kernel_sparse(MT)
    for v in vectors:
        eb.add(sparse_from(v))
    image_rank = len(sp) - len(vectors)
    return EvaluationKernel(sp, eb, image_rank, M)


def image_rank(n: int, product: Product | str) -> int:
    product = Product(product)
    return exactlin.rank(evaluation_matrix(n, product, _FOLD_FOR[product]))


# -- distinguished elements -----------------------------------------------------------


def metabelian_images(n: int) -> list[Element]:
    return [evaluate_tree(t) for t in metabelian_trees(multilinear_letters(n))]


def jordan_spanning_trees(names: Sequence[str]) -> list:
    """{{..{{x_i1,x_i2},{x_i3,x_i4}},..},x_i(2k+1)},..,x_in} with both index runs increasing."""
    names = sorted(names)
    out = []
    for k in range(1, len(names) // 2 + 1):
        for paired in itertools.combinations(names, 2 * k):
            rest = [v for v in names if v not in paired]
            t = bracket("anti", paired[0], paired[1])
            for j in range(2, 2 * k, 2):
                t = bracket("anti", t, bracket("anti", paired[j], paired[j + 1]))
            for v in rest:
                t = bracket("anti", t, v)
            out.append(t)
    return out


def jordan_spanning_images(n: int) -> list[Element]:
    return [evaluate_tree(t) for t in jordan_spanning_trees(multilinear_letters(n))]


def element_rank(elements: Sequence[Element], names: Sequence[str]) -> int:
    basis = enumerate_basis(names)
    if not elements:
        return 0
    return exactlin.rank([coordinates(e, basis) for e in elements])


def symmetric_slice_dim(n: int) -> int:
    """Dimension of the conjugation-fixed multilinear slice, from the basis."""
    words = enumerate_basis(multilinear_letters(n))
    if n == 1:
        return 1
    # one free coordinate per conjugation orbit
    orbits = {frozenset((w, type(w)(w.row, w.col))) for w in words}
    return len(orbits)


# -- verifiers ------------------------------------------------------------------------


def _check_degree(n: int, low: int, bound: int):
    if not low <= n <= bound:
        raise ValueError(f"degree {n} outside the supported range {low}..{bound}")


def _verify_theorem(claim, gens, product, expected_rank, n, bound):
    _check_degree(n, 2, bound)
    polys = [identity(g) for g in gens]
    sound = all(eval_bicom(p, product).is_zero() for p in polys)
    cons = consequence_span(polys, n)
    ker = evaluation_kernel(n, product)
    equal = cons.equals(ker)
    dims = {"magma": magma_dim(n), "kernel": ker.dim, "consequences": cons.dim,
            "image_rank": ker.image_rank, "folded": len(cons.space)}
    notes = []
    if not sound:
        notes.append("a generating identity does not vanish in Bicom")
    if ker.image_rank != expected_rank:
        notes.append(f"image rank {ker.image_rank}, expected {expected_rank}")
    return Report(claim, n, sound and equal and ker.image_rank == expected_rank, dims, notes)


def verify_theorem1(n: int, bound: int = DEFAULT_BOUND) -> Report:
    """Commutator identities follow from anticommutativity, Jacobi, metabelian."""
    return _verify_theorem("theorem1", THEOREM1_GENERATORS, Product.COM, n - 1, n, bound)


def verify_theorem2(n: int, bound: int = DEFAULT_BOUND) -> Report:
    """Anticommutator identities follow from commutativity, minus-Tortken, weak right-commutativity."""
    return _verify_theorem("theorem2", THEOREM2_GENERATORS, Product.ANTI, 2 ** (n - 1) - 1, n, bound)


DEGREE4_ANTI = ["{{{x,y},z},t}", "{{{x,z},y},t}", "{{{x,t},y},z}", "{{{y,z},x},t}",
                "{{{y,t},x},z}", "{{{z,t},x},y}", "{{x,y},{z,t}}"]
DEGREE4_COM = ["[[[x,y],z],t]", "[[[x,z],y],t]", "[[[x,t],y],z]"]


def verify_degree4_independence() -> Report:
    names = ("t", "x", "y", "z")
    r_anti = element_rank([parse_element(s) for s in DEGREE4_ANTI], names)
    r_com = element_rank([parse_element(s) for s in DEGREE4_COM], names)
    # degree 3: nothing beyond the defining identities of degrees 2 and 3
    ker_com = evaluation_kernel(3, Product.COM)
    ker_anti = evaluation_kernel(3, Product.ANTI)
    lie3 = consequence_span([identity("anticommutativity"), identity("jacobi")], 3)
    anti_only = consequence_span([identity("anticommutativity")], 3)
    com3 = consequence_span([identity("commutativity")], 3)
    deg3_com = ker_com.equals(lie3)
    deg3_anti = ker_anti.equals(com3)
    dims = {"anti_rank": r_anti, "com_rank": r_com,
            "kernel3_com": ker_com.dim, "anticom_jacobi3": lie3.dim, "anticom3": anti_only.dim,
            "kernel3_anti": ker_anti.dim, "com3": com3.dim}
    notes = []
    if not deg3_com:
        notes.append("degree-3 commutator kernel differs from anticommutativity + Jacobi")
    if not deg3_anti:
        notes.append("degree-3 anticommutator kernel differs from commutativity")
    ok = r_anti == 7 and r_com == 3 and deg3_com and deg3_anti
    return Report("degree4", 4, ok, dims, notes)


SECTION7_BASIS = ["((a*b)*c)*d", "((a*c)*b)*d", "((a*d)*b)*c", "((b*c)*a)*d", "((b*d)*a)*c",
                  "((c*d)*a)*b", "(a*b)*(c*d)", "(a*c)*(b*d)", "(a*d)*(b*c)"]


def verify_section7() -> Report:
    from .parsing import parse_magma

    A = martin_algebra()
    tortken = identity("minus-tortken")
    wrc = identity("weak-right-commutativity")
    t_check = holds_in_finite(tortken, A)
    w_check = holds_in_finite(wrc, A)
    quarter_e2 = (Fraction(0), Fraction(1, 4), Fraction(0), Fraction(0))
    part_a = t_check.holds and t_check.assignments == A.dim ** 4 and not w_check.holds \
        and w_check.value == quarter_e2
    # free commutative algebra modulo weak right-commutativity, degree 4
    rename = {"a": "x1", "b": "x2", "c": "x3", "d": "x4"}
    quotient_rel = consequence_span([identity("commutativity"), wrc], 4)
    listed = [substitute(parse_magma(s), {k: v for k, v in rename.items()}) for s in SECTION7_BASIS]
    spanning = EchelonBasis(len(quotient_rel.space))
    for r in quotient_rel.basis.rows():
        spanning.add(r)
    for p in listed:
        spanning.add(quotient_rel.space.row(p))
    quotient_dim = quotient_rel.codim
    listed_span = spanning.rank == len(quotient_rel.space)
    tortken_image = not quotient_rel.contains_poly(substitute(tortken, rename))
    dims = {"tortken_assignments": t_check.assignments,
            "witness": w_check.witness and list(w_check.witness.values()),
            "witness_value": A.format_vector(w_check.value) if w_check.value else None,
            "quotient_dim": quotient_dim, "listed": len(listed)}
    ok = part_a and quotient_dim == 9 and listed_span and tortken_image
    notes = [] if tortken_image else ["minus-Tortken lies in the weak right-commutativity consequences"]
    return Report("section7", 4, ok, dims, notes)


def _jordan_slice(names: tuple[str, ...]) -> list[Element]:
    """A basis of the anticommutator span on exactly these variables."""
    if len(names) == 1:
        return [Element.gen(names[0])]
    sp = space(len(names), "com")
    mapping = {f"x{i}": v for i, v in enumerate(names, 1)}
    basis = enumerate_basis(names)
    eb = EchelonBasis(len(basis))
    out = []
    for m in sp.monomials:
        e = evaluate_tree(_to_bracket(_rename(m, mapping), "anti"))
        if eb.add(sparse_from(coordinates(e, basis))):
            out.append(e)
    return out


def verify_filtration(n: int, bound: int = DEFAULT_BOUND) -> Report:
    """J_{n+2} = {J_{n+1}, J_1} + {J_n, J_2} on the multilinear slice."""
    _check_degree(n, 1, bound - 2)
    from .operators import anticommutator

    names = multilinear_letters(n + 2)
    products = []
    for v in names:
        rest = tuple(u for u in names if u != v)
        products += [anticommutator(e, Element.gen(v)) for e in _jordan_slice(rest)]
    for u, v in itertools.combinations(names, 2):
        rest = tuple(w for w in names if w not in (u, v))
        pair = anticommutator(Element.gen(u), Element.gen(v))
        products += [anticommutator(e, pair) for e in _jordan_slice(rest)]
    everything = _jordan_slice(names)
    basis = enumerate_basis(names)
    A = [coordinates(e, basis) for e in products]
    B = [coordinates(e, basis) for e in everything]
    ra, rb = exactlin.rank(A), exactlin.rank(B)
    ok = exactlin.same_row_space(A, B)
    return Report("filtration", n, ok, {"degree": n + 2, "filtered_rank": ra, "jordan_rank": rb})


def verify_corollary(n: int, bound: int = DEFAULT_BOUND) -> Report:
    """Lie inside Jordan for odd degree, trivial intersection for even degree."""
    _check_degree(n, 2, bound)
    lie = metabelian_images(n)
    jordan = jordan_spanning_images(n)
    names = multilinear_letters(n)
    basis = enumerate_basis(names)
    L = [coordinates(e, basis) for e in lie]
    J = [coordinates(e, basis) for e in jordan]
    rl, rj = exactlin.rank(L), exactlin.rank(J)
    joint = exactlin.rank(L + J)
    dims = {"lie_rank": rl, "jordan_rank": rj, "joint_rank": joint}
    if n % 2:
        ok = all(is_symmetric(e) for e in lie) and joint == rj
    else:
        ok = all(is_skew_symmetric(e) for e in lie) and joint == (n - 1) + (2 ** (n - 1) - 1)
    ok = ok and rl == n - 1 and rj == 2 ** (n - 1) - 1
    return Report("corollary", n, ok, dims)
