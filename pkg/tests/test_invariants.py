import pytest
from hypothesis import given, strategies as st

from cfk.builders import box, conway_model, random_model, staircase, thin_model, torus_knot_exponents
from cfk.complexes import mirror, tensor
from cfk.invariants import (
    SearchExhausted,
    a1_algebraic,
    a1_surgery,
    i_filtration_coincides,
    connect_sum_prediction,
    connect_sum_rules,
    epsilon,
    hook_step_level,
    invariants,
    meridian_filtration,
    tau,
)
from cfk.regions import LatticePoint, RegionError, Hook
from cfk.homology import realize


# -- the filtration formula ---------------------------------------------------


def test_meridian_filtration_three_cases():
    assert meridian_filtration(0, 0, 0, 3) == (0, 0)
    assert meridian_filtration(0, 2, 0, 3) == (2, 0)
    assert meridian_filtration(0, 5, 0, 3) == (5, 2)


def test_meridian_filtration_rejects_bad_n():
    with pytest.raises(ValueError):
        meridian_filtration(0, 0, 0, 0)


@given(
    i=st.integers(-30, 30),
    j=st.integers(-30, 30),
    m=st.integers(-15, 15),
    n=st.integers(1, 10),
)
def test_meridian_filtration_properties(i, j, m, n):
    first, second = meridian_filtration(i, j, m, n)
    if j <= m + i:
        assert (first, second) == (i, i)
    elif j - m - i < n:
        assert (first, second) == (j - m, i)
    else:
        assert (first, second) == (j - m, j - m - n)
    assert 0 <= first - second <= n
    # both coordinates grow with j
    up_first, up_second = meridian_filtration(i, j + 1, m, n)
    assert up_first >= first and up_second >= second


@given(i=st.integers(-10, 10), j=st.integers(-10, 10), m=st.integers(-10, 10))
def test_meridian_filtration_n1_has_no_middle_case(i, j, m):
    first, second = meridian_filtration(i, j, m, 1)
    assert first - second in (0, 1)


# -- step levels on the hook --------------------------------------------------


def test_hook_step_level_cases():
    assert hook_step_level(LatticePoint("x", 0, -1), 0, 3) == 0
    assert hook_step_level(LatticePoint("x", -2, 5), 5, 3) == -2
    assert hook_step_level(LatticePoint("x", -5, 5), 5, 3) == -3


def test_hook_step_level_outside_hook():
    with pytest.raises(RegionError):
        hook_step_level(LatticePoint("x", 1, 0), 0, 3)
    with pytest.raises(ValueError):
        hook_step_level(LatticePoint("x", 0, 0), 0, 0)


def test_step_levels_match_filtration_second_coordinate(library):
    for c in library.values():
        g = c.genus_bound
        for m in (-g, 0, g):
            for p in realize(c, Hook(m)).points:
                for n in (1, 3, 2 * g + 1):
                    level = meridian_filtration(p.i, p.j, m, n)
                    assert level.first == 0
                    assert hook_step_level(p, m, n) == level.second


# -- tau ----------------------------------------------------------------------


def test_tau_values(the_unknot, trefoil, left_trefoil, t29):
    assert tau(the_unknot) == 0
    assert tau(trefoil) == 1
    assert tau(left_trefoil) == -1
    assert tau(t29) == 4
    assert tau(mirror(t29)) == -4


def test_tau_exhaustion_on_acyclic_complex():
    with pytest.raises(SearchExhausted):
        tau(box())


# -- epsilon ------------------------------------------------------------------


def test_epsilon_values(the_unknot, trefoil, left_trefoil):
    assert epsilon(the_unknot) == 0
    assert epsilon(trefoil) == 1
    assert epsilon(left_trefoil) == -1
    assert epsilon(conway_model()) == 0


def test_epsilon_zero_implies_tau_zero():
    for seed in range(60):
        c = random_model(seed)
        if epsilon(c) == 0:
            assert tau(c) == 0


# -- a1, both routes ----------------------------------------------------------


def test_a1_paper_values(t29, t45, cable_t23_25):
    assert a1_algebraic(t29) == 1
    assert a1_algebraic(mirror(cable_t23_25)) == -1
    assert a1_algebraic(tensor(mirror(cable_t23_25), t29)) == -1
    assert a1_algebraic(tensor(t45, mirror(cable_t23_25))) == 2


def test_a1_staircase_law():
    for p, q in ((2, 5), (3, 4), (3, 5), (4, 5), (2, 13)):
        e = torus_knot_exponents(p, q)
        c = staircase(e)
        assert tau(c) == e.exponents[0]
        assert a1_algebraic(c) == e.exponents[0] - e.exponents[1]


def test_a1_surgery_values(the_unknot, left_trefoil, t29):
    assert a1_surgery(the_unknot, 1) == 0
    assert a1_surgery(left_trefoil, 3) == -1
    assert a1_surgery(t29, 9) == 1 == a1_algebraic(t29)


def test_a1_surgery_rejects_small_n(trefoil):
    with pytest.raises(ValueError):
        a1_surgery(trefoil, 2)


def test_a1_routes_agree_on_library(library):
    for c in library.values():
        g = c.genus_bound
        want = a1_algebraic(c)
        for n in (2 * g + 1, 2 * g + 2, 2 * g + 5):
            assert a1_surgery(c, n) == want, c.name


def test_a1_mirror_antisymmetry(library):
    for c in library.values():
        assert a1_algebraic(mirror(c)) == -a1_algebraic(c)


def test_a1_self_sum_vanishes(trefoil, cable_t23_25):
    for c in (trefoil, cable_t23_25, thin_model(2, 1)):
        assert a1_algebraic(tensor(c, mirror(c))) == 0


def test_a1_thin_models():
    for t in range(-3, 4):
        assert a1_algebraic(thin_model(t, 1)) == (t > 0) - (t < 0)


def test_sign_of_a1_is_epsilon(library):
    for c in library.values():
        a1 = a1_algebraic(c)
        assert (a1 > 0) - (a1 < 0) == epsilon(c)


# -- the i-filtration coincidence ----------------------------------------------


def test_i_filtration_coincidence(trefoil, t29, library):
    assert i_filtration_coincides(trefoil, 0, 3)
    assert i_filtration_coincides(trefoil, 1, 3)
    assert i_filtration_coincides(t29, 0, 9)
    for c in library.values():
        g = c.genus_bound
        for m in range(-g, g + 1):
            assert i_filtration_coincides(c, m, 2 * g + 1)


def test_i_filtration_hypotheses(trefoil):
    with pytest.raises(ValueError):
        i_filtration_coincides(trefoil, 2, 3)  # slot outside genus bound
    with pytest.raises(ValueError):
        i_filtration_coincides(trefoil, 0, 2)  # cable parameter too small


# -- connect sum rules ----------------------------------------------------------


def test_connect_sum_same_sign(trefoil, t29):
    rep = connect_sum_rules(trefoil, t29)
    assert rep.predicted == 1 == rep.computed


def test_connect_sum_indeterminate(cable_t23_25, t29):
    rep = connect_sum_rules(mirror(cable_t23_25), t29)
    assert rep.predicted is None
    assert rep.computed == -1
    assert rep.consistent


def test_connect_sum_zero_passthrough(library):
    conway = library["conway"]
    for name in ("T(2,3)", "-T(2,3;2,5)", "4_1"):
        rep = connect_sum_rules(conway, library[name])
        assert rep.predicted == a1_algebraic(library[name])
        assert rep.consistent


def test_connect_sum_mixed_signs_nonzero_sum(t45, cable_t23_25, trefoil):
    plus_two = tensor(t45, mirror(cable_t23_25))  # a1 = +2
    rep = connect_sum_rules(plus_two, mirror(trefoil))
    assert (rep.a1_left, rep.a1_right) == (2, -1)
    assert rep.predicted == -1  # positive sum takes the minimum
    assert rep.consistent
    rep = connect_sum_rules(mirror(plus_two), trefoil)
    assert rep.predicted == 1  # negative sum takes the maximum
    assert rep.consistent


def test_connect_sum_prediction_table():
    assert connect_sum_prediction(0, -2) == (-2, "zero summand passes through")
    assert connect_sum_prediction(3, 2) == (2, "both positive: minimum")
    assert connect_sum_prediction(-3, -2) == (-2, "both negative: maximum")
    # mixed signs: positive sum takes the min, negative sum takes the max,
    # so the smaller-magnitude summand always wins
    assert connect_sum_prediction(3, -2)[0] == -2
    assert connect_sum_prediction(-3, 2)[0] == 2
    assert connect_sum_prediction(2, -2) == (None, "mixed signs cancelling: no prediction")


# -- the full report -------------------------------------------------------------


def test_invariant_report(trefoil):
    rep = invariants(trefoil, n=3)
    assert rep.tau == 1 and rep.epsilon == 1 and rep.a1 == 1 == rep.a1_surgery
    assert rep.genus_bound == 1
    assert rep.homology_dims == {"vertical": 1, "hook": 1, "lhook": 1}
    table = rep.as_table()
    assert "a1" in table and "T(2,3)" in table
    assert rep.as_dict()["surgery_n"] == 3


def test_invariant_report_default_n(t45):
    rep = invariants(t45)
    assert rep.surgery_n == 2 * 6 + 1
    assert rep.a1 == 1
