"""Named identities, each with the product under which it is meant."""

from __future__ import annotations

from .magma import MagmaPoly
from .operators import Product
from .parsing import parse_identity_poly

SOURCES = {
    "left-commutativity": ("a*(b*c) = b*(a*c)", Product.PLAIN),
    "right-commutativity": ("(a*b)*c = (a*c)*b", Product.PLAIN),
    "anticommutativity": ("[a,b] = -[b,a]", Product.COM),
    "jacobi": ("[[a,b],c] + [[b,c],a] + [[c,a],b] = 0", Product.COM),
    "metabelian": ("[[a,b],[c,d]] = 0", Product.COM),
    "commutativity": ("{a,b} = {b,a}", Product.ANTI),
    "minus-tortken": ("{{a,b},{c,d}} - {{a,d},{c,b}} = -{assoc(a,b,c),d} + {assoc(a,d,c),b}", Product.ANTI),
    "weak-right-commutativity": ("{{{a,b},c},d} = {{{a,b},d},c}", Product.ANTI),
    "rewriting-1": ("{{a,c},{b,d}} = {{a,b},{c,d}} - {{{a,b},c},d} - {{{c,d},a},b}"
                    " + {{{a,c},b},d} + {{{b,d},a},c}", Product.ANTI),
    "rewriting-2": ("{{a,d},{b,c}} = {{a,b},{c,d}} - {{{a,b},c},d} - {{{c,d},a},b}"
                    " + {{{a,d},b},c} + {{{b,c},a},d}", Product.ANTI),
    # Novikov-style sign; no claim is made about it here
    "tortken": ("{{a,b},{c,d}} - {{a,d},{c,b}} = {assoc(a,b,c),d} - {assoc(a,d,c),b}", Product.ANTI),
}

# identities the free bicommutative algebra satisfies under their product
EXPECTED_TO_HOLD = [k for k in SOURCES if k != "tortken"]


def identity(name: str) -> MagmaPoly:
    """``lhs - rhs`` of a named identity as a magma polynomial."""
    return parse_identity_poly(SOURCES[name][0])


def product_of(name: str) -> Product:
    return SOURCES[name][1]


THEOREM1_GENERATORS = ("anticommutativity", "jacobi", "metabelian")
THEOREM2_GENERATORS = ("commutativity", "minus-tortken", "weak-right-commutativity")
