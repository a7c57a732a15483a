import pytest
from hypothesis import given, strategies as st

from cfk.builders import box, random_model
from cfk.complexes import tensor
from cfk.homology import (
    chain_map_by_points,
    filtration_quotient,
    filtration_subcomplex,
    homology,
    induced_on_homology,
    is_trivial,
    quotient_then_include,
    realize,
    with_filtration,
)
from cfk.invariants import f_map, g_map, tau
from cfk.regions import (
    Hook,
    HookClipped,
    LatticePoint,
    LHook,
    LHookClipped,
    RegionError,
    VerticalClipped,
    VerticalSlice,
)

from oracles import brute_homology_dim, brute_is_trivial


def test_trefoil_column(trefoil):
    x = realize(trefoil, VerticalSlice(0))
    assert x.points == (
        LatticePoint("b0", 0, 1),
        LatticePoint("b1", 0, 0),
        LatticePoint("b2", 0, -1),
    )
    # single surviving entry: b1 -> b2 inside the column
    assert x.boundary == (0, 0b100, 0)
    h = homology(x)
    assert h.dimension == 1
    assert h.representatives == (0b001,)  # the class of [b0, 0, 1]


def test_unknot_hook(the_unknot):
    x = realize(the_unknot, Hook(0))
    assert x.dim == 1
    assert x.boundary == (0,)


def test_trefoil_hook(trefoil):
    x = realize(trefoil, Hook(0))
    assert set(x.points) == {
        LatticePoint("b0", -1, 0),
        LatticePoint("b1", 0, 0),
        LatticePoint("b2", 0, -1),
    }
    k = x.points.index(LatticePoint("b1", 0, 0))
    targets = {x.points[t] for t in range(x.dim) if (x.boundary[k] >> t) & 1}
    assert targets == {LatticePoint("b0", -1, 0), LatticePoint("b2", 0, -1)}


def test_zero_boundary_dimension(the_unknot):
    # with no surviving boundary entries the homology is the whole basis
    x = realize(the_unknot, VerticalSlice(0))
    assert x.boundary == (0,)
    assert homology(x).dimension == x.dim == 1
    assert homology(realize(box(), VerticalSlice(0))).dimension == 0


def test_homology_matches_brute_force(library):
    regions = [VerticalSlice(0), VerticalSlice(-2), Hook(0), Hook(1), LHook(0), Hook(-2)]
    for c in library.values():
        if len(c.generators) > 13:
            continue
        for r in regions:
            x = realize(c, r)
            assert homology(x).dimension == brute_homology_dim(x.boundary), (c.name, r)


def test_representatives_are_nonbounding_cycles(library):
    for c in library.values():
        x = realize(c, Hook(tau(c)))
        h = homology(x)
        for z in h.representatives:
            image = 0
            for k in range(x.dim):
                if (z >> k) & 1:
                    image ^= x.boundary[k]
            assert image == 0


def test_f_map_trefoil(trefoil):
    f = f_map(trefoil, 1)
    killed = [p for k, p in enumerate(f.source.points) if f.columns[k] == 0]
    assert {(p.gen, p.i, p.j) for p in killed} == {("b1", 0, 0), ("b2", 0, -1)}
    sent = [
        (p, f.target.points[f.columns[k].bit_length() - 1])
        for k, p in enumerate(f.source.points)
        if f.columns[k]
    ]
    assert sent == [(LatticePoint("b0", 0, 1), LatticePoint("b0", 0, 1))]
    assert is_trivial(f)  # the positive-sign detection for the trefoil


def test_g_map_trefoil(trefoil):
    g = g_map(trefoil, 1)
    survivors = {p for k, p in enumerate(g.source.points) if g.columns[k]}
    assert all(p.i == 0 for p in survivors)
    assert not is_trivial(g)


def test_identity_quotient(trefoil):
    f = quotient_then_include(trefoil, VerticalSlice(0), VerticalSlice(0))
    assert f.columns == (0b001, 0b010, 0b100)
    assert not is_trivial(f)


def test_trivial_out_of_acyclic():
    b = box()
    f = quotient_then_include(b, VerticalClipped(0, 10), VerticalSlice(0))
    assert is_trivial(f)


def test_g_map_left_trefoil_trivial(left_trefoil):
    assert tau(left_trefoil) == -1
    assert is_trivial(g_map(left_trefoil, -1))


def test_induced_matrix_shape(trefoil):
    f = quotient_then_include(trefoil, VerticalSlice(0), VerticalSlice(0))
    assert induced_on_homology(f) == (0b1,)


def test_triviality_matches_brute_force(library):
    for c in library.values():
        if len(c.generators) > 13:
            continue
        t = tau(c)
        for f in (f_map(c, t), g_map(c, t), f_map(c, t, clip=1), g_map(c, t, clip=-1)):
            got = is_trivial(f)
            want = brute_is_trivial(f.source.boundary, f.target.boundary, f.columns)
            assert got == want, c.name


def test_column_translation_invariance(library):
    for c in library.values():
        dims = {homology(realize(c, VerticalSlice(i0))).dimension for i0 in (-3, 0, 2)}
        assert len(dims) == 1


def test_hook_stabilization(library):
    for c in library.values():
        g = c.genus_bound
        assert (
            homology(realize(c, Hook(g))).dimension
            == homology(realize(c, Hook(g + 2))).dimension
        )
        assert (
            homology(realize(c, Hook(-g))).dimension
            == homology(realize(c, Hook(-g - 2))).dimension
        )


def test_region_kind_enforced(trefoil):
    with pytest.raises(RegionError):
        realize(trefoil, "hook please")


def test_noncommuting_kill_rejected(trefoil):
    source = realize(trefoil, VerticalSlice(0))
    # killing b2 (the image of b1) but keeping b1 cannot commute
    with pytest.raises(RegionError):
        chain_map_by_points(source, source, {0, 1})


def test_filtration_levels_checked(trefoil):
    x = realize(trefoil, VerticalSlice(0))
    with pytest.raises(RegionError):
        with_filtration(x, (0, 0, 1))  # boundary b1 -> b2 would raise the level
    y = with_filtration(x, (1, 1, 0))
    assert filtration_subcomplex(y, 0).dim == 1
    assert filtration_quotient(y, 1).dim == 2


def test_filtration_required(trefoil):
    x = realize(trefoil, VerticalSlice(0))
    with pytest.raises(RegionError):
        filtration_subcomplex(x, 0)


@given(
    alexander=st.integers(-8, 8),
    m=st.integers(-5, 5),
    clip=st.integers(-5, 5),
    i0=st.integers(-3, 3),
)
def test_lattice_points_agree_with_membership(alexander, m, clip, i0):
    regions = [
        VerticalSlice(i0),
        VerticalClipped(i0, clip),
        Hook(m),
        HookClipped(m, clip),
        LHook(m),
        LHookClipped(m, clip),
    ]
    for r in regions:
        pts = r.lattice_points(alexander)
        assert len(pts) == len(set(pts))
        for (i, j) in pts:
            assert j - i == alexander
            assert r.contains(i, j)
        # hooks and slices list every point of the occupied diagonal
        if isinstance(r, (VerticalSlice, Hook, LHook)):
            assert len(pts) == 1


def test_tensor_region_realization_consistency(trefoil):
    # spot check: a tensor complex realizes with one point per generator on hooks
    t = tensor(trefoil, trefoil)
    x = realize(t, Hook(0))
    assert x.dim == len(t.generators)


def test_random_models_brute_homology():
    for seed in range(12):
        c = random_model(seed, size=1)
        if len(c.generators) > 13:
            continue
        for r in (VerticalSlice(0), Hook(0)):
            x = realize(c, r)
            assert homology(x).dimension == brute_homology_dim(x.boundary)
