"""Region realizations, mod-2 homology and induced maps on homology.

Realizing a region turns a bifiltered complex into a plain finite chain
complex over the two-element field.  Chains are int bitsets over the basis
(see gf2); homology representatives are picked by deterministic pivoting in
basis order so fixtures stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from . import gf2
from .complexes import CfkComplex
from .regions import LatticePoint, Region, RegionError, check_region


@dataclass(frozen=True)
class F2Complex:
    """Chain complex over the two-element field with a fixed ordered basis.

    ``boundary`` holds one column bitmask per basis point.  ``filtration``
    optionally assigns an integer level to each basis point; the boundary
    of a point may never raise the level.
    """

    points: tuple[LatticePoint, ...]
    boundary: tuple[int, ...]
    filtration: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.points)

    def point_index(self) -> dict[LatticePoint, int]:
        return {p: k for k, p in enumerate(self.points)}

    def check(self) -> None:
        cols = list(self.boundary)
        for j in range(self.dim):
            if gf2.apply_columns(cols, cols[j]) != 0:
                raise RegionError(f"boundary^2 != 0 at basis point {self.points[j]}")
        if self.filtration is not None:
            for j, col in enumerate(cols):
                level = self.filtration[j]
                v = col
                while v:
                    low = v & -v
                    if self.filtration[low.bit_length() - 1] > level:
                        raise RegionError("boundary raises the filtration level")
                    v ^= low


@lru_cache(maxsize=4096)
def realize(complex: CfkComplex, region: Region) -> F2Complex:
    """Subquotient complex spanned by the region's occupied lattice points.

    A differential entry d(x) = U^k y connects [x, i, j] to [y, i-k, i-k+A(y)];
    the induced boundary keeps exactly the pairs with both endpoints inside
    the region.  Results are cached; everything involved is immutable.
    """
    check_region(region)
    points: list[LatticePoint] = []
    for g in complex.generators:
        for (i, j) in region.lattice_points(g.alexander):
            points.append(LatticePoint(g.id, i, j))
    index = {p: k for k, p in enumerate(points)}

    boundary = [0] * len(points)
    for k, p in enumerate(points):
        for e in complex.entries_from.get(p.gen, ()):
            ti = p.i - e.upower
            tj = ti + complex.alexander(e.dst)
            target = LatticePoint(e.dst, ti, tj)
            t = index.get(target)
            if t is not None:
                boundary[k] ^= 1 << t
    out = F2Complex(tuple(points), tuple(boundary))
    out.check()
    return out


@dataclass(frozen=True)
class HomologyResult:
    dimension: int
    representatives: tuple[int, ...]  # cycle bitmasks over the basis
    image_basis: tuple[int, ...]  # basis of the boundary image


@lru_cache(maxsize=8192)
def homology(x: F2Complex) -> HomologyResult:
    """Kernel-mod-image over the two-element field.

    Representatives are kernel vectors that stay independent from the
    boundary image, chosen greedily in the deterministic kernel order.
    """
    image, kernel = gf2.image_and_kernel(list(x.boundary))
    basis = gf2.XorBasis()
    for v in image:
        basis.insert(v)
    reps = []
    for z in kernel:
        reduced, _ = basis.insert(z)
        if reduced:
            reps.append(z)
    return HomologyResult(len(reps), tuple(reps), tuple(image))


@dataclass(frozen=True)
class ChainMap:
    """Matrix over the two-element field commuting with the boundaries."""

    source: F2Complex
    target: F2Complex
    columns: tuple[int, ...]  # image bitmask over the target basis, per source point

    def apply(self, chain: int) -> int:
        return gf2.apply_columns(list(self.columns), chain)

    def check(self) -> None:
        src_cols = list(self.source.boundary)
        tgt_cols = list(self.target.boundary)
        cols = list(self.columns)
        for k in range(self.source.dim):
            via_source = gf2.apply_columns(cols, src_cols[k])
            via_target = gf2.apply_columns(tgt_cols, cols[k])
            if via_source != via_target:
                raise RegionError(
                    f"map does not commute with boundaries at {self.source.points[k]}"
                )


def chain_map_by_points(source: F2Complex, target: F2Complex, survivors: set[int]) -> ChainMap:
    """Map sending each surviving basis point to the same lattice point, rest to 0."""
    tgt_index = target.point_index()
    cols = []
    for k, p in enumerate(source.points):
        if k in survivors:
            t = tgt_index.get(p)
            if t is None:
                raise RegionError(f"surviving point {p} is missing from the target")
            cols.append(1 << t)
        else:
            cols.append(0)
    out = ChainMap(source, target, tuple(cols))
    out.check()
    return out


def quotient_then_include(
    complex: CfkComplex,
    source_region: Region,
    target_region: Region,
    kill_region: Region | None = None,
) -> ChainMap:
    """The composite "quotient by the kill set, then include into the target".

    With kill_region omitted the kill set is every source point outside the
    target region, which is the shape of all the maps the invariants need.
    The result is checked to commute with the boundaries.
    """
    source = realize(complex, source_region)
    target = realize(complex, target_region)
    if kill_region is None:
        survivors = {
            k for k, p in enumerate(source.points) if target_region.contains(p.i, p.j)
        }
    else:
        check_region(kill_region)
        survivors = {
            k for k, p in enumerate(source.points) if not kill_region.contains(p.i, p.j)
        }
    return chain_map_by_points(source, target, survivors)


def induced_on_homology(f: ChainMap) -> tuple[int, ...]:
    """Matrix of the induced map, as columns over the target homology basis.

    Column k gives the coordinates of f(z_k) in the chosen homology
    representatives of the target, for the k-th source representative z_k.
    """
    hx = homology(f.source)
    hy = homology(f.target)
    # Solve f(z) = sum a_i h_i + boundary; the a_i exist because f(z) is a cycle.
    generators = list(hy.representatives) + list(hy.image_basis)
    cols = []
    for z in hx.representatives:
        combo = gf2.solve(generators, f.apply(z))
        if combo is None:
            raise RegionError("image of a cycle is not a cycle")
        cols.append(combo & ((1 << hy.dimension) - 1))
    return tuple(cols)


def is_trivial(f: ChainMap) -> bool:
    """True when the induced map on homology is zero (including dim-0 sources)."""
    return all(c == 0 for c in induced_on_homology(f))


def with_filtration(x: F2Complex, levels: tuple[int, ...]) -> F2Complex:
    out = replace(x, filtration=levels)
    out.check()
    return out


def _restrict(x: F2Complex, keep: list[int]) -> F2Complex:
    """Subquotient of x spanned by the kept basis points.

    Only valid when the kept set is a filtration sub or quotient piece;
    the boundary check on the result guards misuse.
    """
    old_to_new = {old: new for new, old in enumerate(keep)}
    points = tuple(x.points[k] for k in keep)
    cols = []
    for k in keep:
        col = 0
        v = x.boundary[k]
        while v:
            low = v & -v
            t = old_to_new.get(low.bit_length() - 1)
            if t is not None:
                col ^= 1 << t
            v ^= low
        cols.append(col)
    filt = None
    if x.filtration is not None:
        filt = tuple(x.filtration[k] for k in keep)
    out = F2Complex(points, tuple(cols), filt)
    out.check()
    return out


def filtration_subcomplex(x: F2Complex, max_level: int) -> F2Complex:
    """Points with level <= max_level; a subcomplex since boundaries drop levels."""
    if x.filtration is None:
        raise RegionError("complex carries no filtration")
    return _restrict(x, [k for k in range(x.dim) if x.filtration[k] <= max_level])


def filtration_quotient(x: F2Complex, min_level: int) -> F2Complex:
    """Quotient by the subcomplex below min_level; points with level >= min_level."""
    if x.filtration is None:
        raise RegionError("complex carries no filtration")
    return _restrict(x, [k for k in range(x.dim) if x.filtration[k] >= min_level])
