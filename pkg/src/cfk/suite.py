"""Executable property suite over the shipped library and random models.

Each property returns the number of cases checked and a list of failure
descriptions naming the offending complex; the runner prints one line per
property and reports overall success.  Everything is deterministic in the
seed count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import gf2
from .builders import (
    box,
    build_library,
    random_model,
    staircase,
    thin_model,
    torus_knot_exponents,
)
from .complexes import CfkComplex, direct_sum, mirror, parse, serialize, tensor, validate
from .homology import homology, realize
from .invariants import (
    a1_algebraic,
    a1_surgery,
    connect_sum_rules,
    epsilon,
    hook_step_level,
    i_filtration_coincides,
    meridian_filtration,
    tau,
)
from .regions import Hook, VerticalSlice


@dataclass
class PropertyResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _offender(c: CfkComplex, what: str) -> str:
    return f"{what} [{c.name}]\n{serialize(c)}"


class SuiteContext:
    def __init__(self, seed_count: int, extra_files: Iterable[str] = ()):
        self.library = build_library()
        self.randoms = [random_model(seed) for seed in range(seed_count)]
        self.extras = []
        for path in extra_files:
            with open(path, encoding="utf-8") as fh:
                self.extras.append(parse(fh.read()))
        self.pool = list(self.library.values()) + self.randoms + self.extras
        # smaller pools for the properties whose cost is quadratic in size
        self.small_pool = list(self.library.values()) + self.randoms[:10] + self.extras
        self.tiny_pool = [c for c in self.small_pool if len(c.generators) <= 20]


def prop_validate(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        rep = validate(c)
        if not rep.ok:
            failed = [k for k, ok in rep.checks.items() if not ok]
            failures.append(_offender(c, f"validation failed: {', '.join(failed)}"))
    return len(ctx.pool), failures


def prop_round_trip(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        text = serialize(c)
        if serialize(parse(text)) != text:
            failures.append(_offender(c, "serialization round trip not canonical"))
    return len(ctx.pool), failures


def prop_mirror_involution(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        if mirror(mirror(c)).structure() != c.structure():
            failures.append(_offender(c, "mirror applied twice is not the identity"))
    return len(ctx.pool), failures


def prop_slice_dim_one(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        dim = homology(realize(c, VerticalSlice(0))).dimension
        if dim != 1:
            failures.append(_offender(c, f"column homology dimension {dim}"))
    return len(ctx.pool), failures


def prop_slice_translation(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.small_pool:
        dims = {homology(realize(c, VerticalSlice(i0))).dimension for i0 in (-2, 0, 3)}
        if len(dims) != 1:
            failures.append(_offender(c, f"column homology varies across columns: {dims}"))
    return len(ctx.small_pool), failures


def prop_hook_stabilization(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.small_pool:
        g = c.genus_bound
        high = {homology(realize(c, Hook(m))).dimension for m in (g, g + 1, g + 3)}
        low = {homology(realize(c, Hook(m))).dimension for m in (-g, -g - 1, -g - 3)}
        if len(high) != 1 or len(low) != 1:
            failures.append(_offender(c, "hook homology fails to stabilize"))
    return len(ctx.small_pool), failures


def prop_euler_characteristic(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for c in ctx.pool:
        if not c.maslov_present:
            continue
        cases += 1
        column = realize(c, VerticalSlice(0))
        maslov = {g.id: g.maslov for g in c.generators}
        even = [k for k, p in enumerate(column.points) if maslov[p.gen] % 2 == 0]
        odd = [k for k, p in enumerate(column.points) if maslov[p.gen] % 2 != 0]
        r_even = gf2.rank([column.boundary[k] for k in even])
        r_odd = gf2.rank([column.boundary[k] for k in odd])
        h_even = len(even) - r_even - r_odd
        h_odd = len(odd) - r_odd - r_even
        chi = sum(1 if maslov[p.gen] % 2 == 0 else -1 for p in column.points)
        total = homology(column).dimension
        if h_even - h_odd != chi or h_even + h_odd != total:
            failures.append(_offender(c, "euler characteristic mismatch on the column"))
    return cases, failures


def prop_staircase_laws(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    shapes = [(2, 3), (2, 5), (2, 7), (2, 9), (2, 11), (2, 13), (3, 4), (3, 5), (4, 5)]
    for p, q in shapes:
        e = torus_knot_exponents(p, q)
        c = staircase(e, name=f"T({p},{q})")
        if tau(c) != e.exponents[0]:
            failures.append(_offender(c, f"staircase tau != {e.exponents[0]}"))
        if a1_algebraic(c) != e.exponents[0] - e.exponents[1]:
            failures.append(_offender(c, "staircase a1 != first step length"))
    return len(shapes), failures


def prop_thin_law(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for t in range(-3, 4):
        want = (t > 0) - (t < 0)
        for boxes, offset in ((0, 0), (2, 0), (2, 1), (1, -2)):
            cases += 1
            c = thin_model(t, boxes, offset)
            got = a1_algebraic(c)
            if got != want:
                failures.append(_offender(c, f"thin model a1 {got} != sgn(tau) {want}"))
    return cases, failures


def prop_sign_epsilon(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        a1 = a1_algebraic(c)
        if (a1 > 0) - (a1 < 0) != epsilon(c):
            failures.append(_offender(c, "sgn(a1) differs from epsilon"))
    return len(ctx.pool), failures


def prop_mirror_antisymmetry(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        if a1_algebraic(mirror(c)) != -a1_algebraic(c):
            failures.append(_offender(c, "a1 not antisymmetric under mirror"))
    return len(ctx.pool), failures


def prop_surgery_equivalence(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for c in ctx.pool:
        g = c.genus_bound
        want = a1_algebraic(c)
        for n in (2 * g + 1, 2 * g + 2, 2 * g + 5):
            cases += 1
            got = a1_surgery(c, n)
            if got != want:
                failures.append(
                    _offender(c, f"surgery a1 {got} (n={n}) != algebraic a1 {want}")
                )
    return cases, failures


def prop_self_sum_vanishes(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.tiny_pool:
        value = a1_algebraic(tensor(c, mirror(c)))
        if value != 0:
            failures.append(_offender(c, f"a1 of the self connect sum is {value}"))
    return len(ctx.tiny_pool), failures


def prop_connect_sum_rules(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    names = list(ctx.library)
    for na in names:
        for nb in names:
            rep = connect_sum_rules(ctx.library[na], ctx.library[nb])
            if rep.predicted is None:
                continue
            cases += 1
            if not rep.consistent:
                failures.append(
                    f"connect sum {na} # {nb}: predicted {rep.predicted} "
                    f"({rep.rule}), computed {rep.computed}"
                )
    return cases, failures


def prop_epsilon_zero_tau_zero(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    for c in ctx.pool:
        if epsilon(c) == 0 and tau(c) != 0:
            failures.append(_offender(c, "epsilon 0 but tau nonzero"))
    return len(ctx.pool), failures


def prop_meridian_window(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    rng = range(-6, 7)
    for n in range(1, 5):
        for m in rng:
            for i in rng:
                previous = None
                for j in rng:
                    cases += 1
                    first, second = meridian_filtration(i, j, m, n)
                    if j <= m + i:
                        want = (i, i)
                    elif j - m - i < n:
                        want = (j - m, i)
                    else:
                        want = (j - m, j - m - n)
                    if (first, second) != want:
                        failures.append(f"filtration({i},{j},{m},{n}) = {(first, second)}")
                    if not 0 <= first - second <= n:
                        failures.append(f"filtration({i},{j},{m},{n}) drop out of range")
                    if n == 1 and first - second not in (0, 1):
                        failures.append(f"filtration({i},{j},{m},1) has a middle case")
                    if previous is not None and (first < previous[0] or second < previous[1]):
                        failures.append(f"filtration not monotone at ({i},{j},{m},{n})")
                    previous = (first, second)
    return cases, failures


def prop_step_level_consistency(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for c in ctx.small_pool:
        g = c.genus_bound
        for m in range(-g, g + 1):
            hook = realize(c, Hook(m))
            for n in (1, 2, 2 * g + 1):
                for p in hook.points:
                    cases += 1
                    level = meridian_filtration(p.i, p.j, m, n)
                    if hook_step_level(p, m, n) != level.second or level.first != 0:
                        failures.append(_offender(c, f"step level mismatch at {p}"))
    return cases, failures


def prop_i_filtration(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for c in ctx.pool:
        g = c.genus_bound
        for m in range(-g, g + 1):
            cases += 1
            if not i_filtration_coincides(c, m, 2 * g + 1):
                failures.append(_offender(c, f"step levels leave the i-filtration at m={m}"))
    return cases, failures


def prop_tensor_commutes(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    pairs = [
        ("T(2,3)", "T(2,9)"),
        ("-T(2,3;2,5)", "T(4,5)"),
        ("4_1", "T(2,3)"),
        ("conway", "-T(2,3)"),
    ]
    for na, nb in pairs:
        ab = tensor(ctx.library[na], ctx.library[nb])
        ba = tensor(ctx.library[nb], ctx.library[na])
        if (tau(ab), a1_algebraic(ab)) != (tau(ba), a1_algebraic(ba)):
            failures.append(f"tensor of {na}, {nb} not symmetric in its invariants")
    a, b, c = (ctx.library[n] for n in ("T(2,3)", "-T(2,3;2,5)", "4_1"))
    left = tensor(tensor(a, b), c)
    right = tensor(a, tensor(b, c))
    if (tau(left), a1_algebraic(left)) != (tau(right), a1_algebraic(right)):
        failures.append("tensor not associative in its invariants")
    return len(pairs) + 1, failures


def prop_box_neutrality(ctx: SuiteContext) -> tuple[int, list[str]]:
    failures = []
    cases = 0
    for name in ("T(2,3)", "T(2,9)", "conway"):
        base = ctx.library[name]
        for offset in (-1, 0, 2):
            cases += 1
            padded = direct_sum(base, box(offset, prefix="pad."))
            same = (
                tau(padded) == tau(base)
                and epsilon(padded) == epsilon(base)
                and a1_algebraic(padded) == a1_algebraic(base)
            )
            if not same:
                failures.append(_offender(padded, "box summand changed an invariant"))
    return cases, failures


PROPERTIES: list[tuple[str, Callable[[SuiteContext], tuple[int, list[str]]]]] = [
    ("validate", prop_validate),
    ("round-trip", prop_round_trip),
    ("mirror-involution", prop_mirror_involution),
    ("column-dim-one", prop_slice_dim_one),
    ("column-translation", prop_slice_translation),
    ("hook-stabilization", prop_hook_stabilization),
    ("euler-characteristic", prop_euler_characteristic),
    ("staircase-laws", prop_staircase_laws),
    ("thin-law", prop_thin_law),
    ("sign-epsilon", prop_sign_epsilon),
    ("mirror-antisymmetry", prop_mirror_antisymmetry),
    ("surgery-equivalence", prop_surgery_equivalence),
    ("self-sum-vanishes", prop_self_sum_vanishes),
    ("connect-sum-rules", prop_connect_sum_rules),
    ("epsilon-zero-tau-zero", prop_epsilon_zero_tau_zero),
    ("meridian-window", prop_meridian_window),
    ("step-level-consistency", prop_step_level_consistency),
    ("i-filtration-coincidence", prop_i_filtration),
    ("tensor-commutes", prop_tensor_commutes),
    ("box-neutrality", prop_box_neutrality),
]


def run_suite(
    seed_count: int = 50,
    extra_files: Iterable[str] = (),
    emit: Callable[[str], None] = print,
) -> bool:
    ctx = SuiteContext(seed_count, extra_files)
    ok = True
    for name, prop in PROPERTIES:
        cases, failures = prop(ctx)
        if failures:
            ok = False
            emit(f"FAIL {name} ({len(failures)} of {cases} cases)")
            for f in failures[:5]:
                emit("  " + f.replace("\n", "\n  "))
            if len(failures) > 5:
                emit(f"  ... and {len(failures) - 5} more")
        else:
            emit(f"ok   {name} ({cases} cases)")
    emit("suite PASS" if ok else "suite FAIL")
    return ok
