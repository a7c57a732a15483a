"""Linear algebra over the two-element field using int bitsets.

A vector is an int whose bit ``i`` is the coefficient of basis element ``i``.
A matrix is a list of column vectors.  Everything is exact; no floats.
"""

from __future__ import annotations


def lowbit(v: int) -> int:
    """Lowest set bit of v (0 for the zero vector)."""
    return v & -v


class XorBasis:
    """Incremental row-reduced basis with combination tracking.

    Vectors are inserted in order; each is reduced against the current
    basis using the lowest set bit as pivot, which makes every result
    deterministic in the insertion order.
    """

    def __init__(self) -> None:
        self.pivots: list[int] = []  # pivot bit per basis vector
        self.vectors: list[int] = []
        self.combos: list[int] = []  # combo mask over inserted indices
        self.inserted = 0

    def reduce(self, v: int, combo: int = 0) -> tuple[int, int]:
        for p, bv, bc in zip(self.pivots, self.vectors, self.combos):
            if v & p:
                v ^= bv
                combo ^= bc
        return v, combo

    def insert(self, v: int) -> tuple[int, int]:
        """Insert a vector; return its reduced form and combo mask.

        A reduced form of 0 means v was already in the span; the combo
        mask then names a subset of previously inserted vectors (plus v
        itself) that XORs to zero.
        """
        idx = self.inserted
        self.inserted += 1
        v, combo = self.reduce(v, 1 << idx)
        if v:
            self.pivots.append(lowbit(v))
            self.vectors.append(v)
            self.combos.append(combo)
        return v, combo

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    @property
    def rank(self) -> int:
        return len(self.vectors)


def rank(vectors: list[int]) -> int:
    """Rank of the span of the given vectors."""
    basis = XorBasis()
    for v in vectors:
        basis.insert(v)
    return basis.rank


def image_and_kernel(cols: list[int]) -> tuple[list[int], list[int]]:
    """Column space basis and kernel basis of a matrix given by columns.

    The image basis is returned as the original (unreduced) columns that
    got pivots.  Each kernel element is a mask over column indices whose
    columns XOR to zero.  Both lists are deterministic in column order.
    """
    basis = XorBasis()
    image: list[int] = []
    kernel: list[int] = []
    for j, c in enumerate(cols):
        reduced, combo = basis.insert(c)
        if reduced:
            image.append(c)
        else:
            kernel.append(combo)
    return image, kernel


def solve(vectors: list[int], target: int) -> int | None:
    """Mask m with XOR of vectors[i] for i in m equal to target, or None."""
    basis = XorBasis()
    for v in vectors:
        basis.insert(v)
    reduced, combo = basis.reduce(target)
    if reduced:
        return None
    return combo


def apply_columns(cols: list[int], v: int) -> int:
    """Image of vector v under the matrix with the given columns."""
    out = 0
    while v:
        low = v & -v
        out ^= cols[low.bit_length() - 1]
        v ^= low
    return out
