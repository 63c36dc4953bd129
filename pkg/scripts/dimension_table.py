"""Multilinear dimensions of the bicommutative, Jordan and Lie slices.

Each column is computed, not looked up: basis enumeration for Bicom,
exact ranks of the anticommutator and commutator evaluation maps for the
other two.  Prints a markdown table.
"""

import sys

from bicomlab.consequences import DEFAULT_BOUND, element_rank, image_rank, jordan_spanning_images, metabelian_images
from bicomlab.core import enumerate_basis, multilinear_letters
from bicomlab.operators import Product


def row(n):
    names = multilinear_letters(n)
    bicom = len(enumerate_basis(names))
    jordan = image_rank(n, Product.ANTI)
    lie = image_rank(n, Product.COM)
    joint = element_rank(metabelian_images(n) + jordan_spanning_images(n), names)
    return n, bicom, jordan, lie, joint


def main(top=DEFAULT_BOUND):
    print("| n | Bicom | Jordan | Lie | dim(L+J) |")
    print("|---|---|---|---|---|")
    for n in range(2, top + 1):
        print("| " + " | ".join(map(str, row(n))) + " |")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_BOUND)
