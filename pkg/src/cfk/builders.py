"""Model complexes: staircases, boxes, thin and Conway models, random models.

Staircases realize complexes of L-space knots from the alternating exponents
of their Alexander polynomials; torus-knot and cable exponents are computed
by exact polynomial arithmetic.  The random generator composes these shapes,
so every model it emits is valid by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from functools import reduce
from math import gcd

from .complexes import CfkComplex, CfkError, DiffEntry, Generator, direct_sum, mirror, tensor


@dataclass(frozen=True)
class AlexanderExponents:
    """Strictly decreasing, negation-symmetric exponents of even index count.

    >>> AlexanderExponents((1, 0, -1)).exponents
    (1, 0, -1)
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        e = tuple(self.exponents)
        object.__setattr__(self, "exponents", e)
        if not e:
            raise ValueError("empty exponent list")
        if any(a <= b for a, b in zip(e, e[1:])):
            raise ValueError(f"exponents not strictly decreasing: {e}")
        if list(e) != [-x for x in reversed(e)]:
            raise ValueError(f"exponents not symmetric under negation: {e}")
        if len(e) % 2 == 0:
            raise ValueError(f"need an odd number of exponents, got {len(e)}")

    def __len__(self) -> int:
        return len(self.exponents)


def staircase(exponents: AlexanderExponents, name: str | None = None) -> CfkComplex:
    """Staircase complex of the L-space knot with the given exponents.

    One generator per exponent; each odd position carries a vertical edge
    down the staircase and a horizontal edge (a positive U power) back up.

    >>> staircase(AlexanderExponents((0,))).generators[0].alexander
    0
    """
    e = exponents.exponents
    if name is None:
        name = "staircase[" + ",".join(str(x) for x in e) + "]"
    maslov = [0] * len(e)
    for k in range(1, len(e)):
        if k % 2 == 1:
            maslov[k] = maslov[k - 1] + 1 - 2 * (e[k - 1] - e[k])
        else:
            maslov[k] = maslov[k - 1] - 1
    gens = tuple(Generator(f"b{k}", e[k], maslov[k]) for k in range(len(e)))
    entries = []
    for k in range(1, len(e), 2):
        entries.append(DiffEntry(f"b{k}", f"b{k + 1}", 0))
        entries.append(DiffEntry(f"b{k}", f"b{k - 1}", e[k - 1] - e[k]))
    return CfkComplex(name, gens, tuple(entries))


def unknot() -> CfkComplex:
    return staircase(AlexanderExponents((0,)), name="unknot")


def box(offset: int = 0, prefix: str = "q") -> CfkComplex:
    """Acyclic square summand: four generators, two vertical and two
    horizontal edges.  Contributes nothing to homology in any region."""
    mu = offset
    gens = (
        Generator(f"{prefix}tl", offset + 1, mu + 1),
        Generator(f"{prefix}tr", offset, mu),
        Generator(f"{prefix}bl", offset, mu),
        Generator(f"{prefix}br", offset - 1, mu - 1),
    )
    entries = (
        DiffEntry(f"{prefix}tr", f"{prefix}br", 0),
        DiffEntry(f"{prefix}tl", f"{prefix}bl", 0),
        DiffEntry(f"{prefix}tr", f"{prefix}tl", 1),
        DiffEntry(f"{prefix}br", f"{prefix}bl", 1),
    )
    return CfkComplex(f"box({offset})", gens, entries)


def add_boxes(complex: CfkComplex, count: int, offset: int = 0) -> CfkComplex:
    out = complex
    for k in range(count):
        out = direct_sum(out, box(offset, prefix=f"q{k}."))
    return replace(out, name=complex.name) if count else out


def thin_model(tau: int, boxes: int = 0, box_offset: int = 0) -> CfkComplex:
    """Model complex of a homologically thin knot with the given tau.

    The homology-carrying summand is the (mirrored, for negative tau)
    two-stranded staircase; zero tau leaves a single isolated generator.
    Box summands never change any invariant.
    """
    if tau > 0:
        core = staircase(AlexanderExponents(tuple(range(tau, -tau - 1, -1))))
    elif tau < 0:
        core = mirror(staircase(AlexanderExponents(tuple(range(-tau, tau - 1, -1)))))
    else:
        core = CfkComplex("isolated", (Generator("o", 0, 0),), ())
    out = add_boxes(core, boxes, box_offset)
    return replace(out, name=f"thin(tau={tau},boxes={boxes})")


def conway_model(boxes: int = 3) -> CfkComplex:
    """Single generator at the origin plus null-homologous boxes."""
    core = CfkComplex("conway", (Generator("o", 0, 0),), ())
    out = core
    offsets = [1, 0, -1, 2, -2]
    for k in range(boxes):
        out = direct_sum(out, box(offsets[k % len(offsets)], prefix=f"q{k}."))
    return replace(out, name="conway")


# -- Alexander polynomial arithmetic ---------------------------------------
# Dense integer coefficient lists, ascending degree; a Laurent polynomial is
# a (coeffs, lowest_exponent) pair.


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    while den and den[-1] == 0:
        den = den[:-1]
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % den[dn] != 0:
            raise CfkError("polynomial division is not exact")
        q = c // den[dn]
        quot[i - dn] = q
        for j, cd in enumerate(den):
            num[i - dn + j] -= q * cd
    if any(num):
        raise CfkError("polynomial division is not exact")
    return quot


def _laurent_from_exponents(exponents: tuple[int, ...]) -> tuple[list[int], int]:
    lo = min(exponents)
    coeffs = [0] * (max(exponents) - lo + 1)
    for k, e in enumerate(exponents):
        coeffs[e - lo] += -1 if k % 2 else 1
    return coeffs, lo


def _alternating_exponents(coeffs: list[int], lo: int) -> tuple[int, ...]:
    """Exponents of an alternating plus/minus-one polynomial, descending.

    Raises when any coefficient falls outside {-1, 0, 1} or the signs fail
    to alternate starting from +1 at the top degree.
    """
    terms = [(k + lo, c) for k, c in enumerate(coeffs) if c]
    terms.reverse()
    for pos, (_, c) in enumerate(terms):
        if c != (1 if pos % 2 == 0 else -1):
            raise CfkError("polynomial is not of alternating sign form")
    return tuple(e for e, _ in terms)


def torus_knot_exponents(p: int, q: int) -> AlexanderExponents:
    """Alexander exponents of the (p, q) torus knot from the product formula.

    >>> torus_knot_exponents(2, 3).exponents
    (1, 0, -1)
    >>> torus_knot_exponents(4, 5).exponents
    (6, 5, 2, 0, -2, -5, -6)
    """
    if p < 1 or q < 1:
        raise ValueError(f"need positive parameters, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"parameters ({p}, {q}) are not coprime")

    def one_minus_t_pow(k: int) -> list[int]:
        c = [0] * (k + 1)
        c[0] = -1
        c[k] = 1
        return c

    num = _poly_mul(one_minus_t_pow(p * q), one_minus_t_pow(1))
    quot = _poly_divexact(num, _poly_mul(one_minus_t_pow(p), one_minus_t_pow(q)))
    genus = (p - 1) * (q - 1) // 2
    return AlexanderExponents(_alternating_exponents(quot, -genus))


def cable_exponents(base: AlexanderExponents, p: int, q: int) -> AlexanderExponents:
    """Exponents of the (p, q) cable: base polynomial at t^p times the torus factor.

    Refuses results that are not of alternating sign form, since only those
    give staircase complexes.

    >>> cable_exponents(torus_knot_exponents(2, 3), 2, 5).exponents
    (4, 3, 0, -3, -4)
    """
    base_coeffs, base_lo = _laurent_from_exponents(base.exponents)
    scaled = [0] * ((len(base_coeffs) - 1) * p + 1)
    for k, c in enumerate(base_coeffs):
        scaled[k * p] = c
    torus_coeffs, torus_lo = _laurent_from_exponents(torus_knot_exponents(p, q).exponents)
    product = _poly_mul(scaled, torus_coeffs)
    return AlexanderExponents(_alternating_exponents(product, base_lo * p + torus_lo))


# -- Random models -----------------------------------------------------------


def _random_exponents(rng: random.Random) -> AlexanderExponents:
    count = rng.randint(1, 2)
    positives = sorted(rng.sample(range(1, 7), count), reverse=True)
    return AlexanderExponents(tuple(positives) + (0,) + tuple(-x for x in reversed(positives)))


def random_model(seed: int, size: int = 2) -> CfkComplex:
    """Deterministic valid complex from the grammar: summands are staircases
    or thin models with boxes, tensored together up to ``size`` factors."""
    rng = random.Random(seed)
    factors = []
    for _ in range(rng.randint(1, max(1, size))):
        if rng.random() < 0.5:
            part = staircase(_random_exponents(rng))
            if rng.random() < 0.4:
                part = add_boxes(part, 1, rng.randint(-2, 2))
        else:
            part = thin_model(rng.randint(-2, 2), rng.randint(0, 1), rng.randint(-2, 2))
        factors.append(part)
    out = reduce(tensor, factors)
    return replace(out, name=f"random({seed},{size})")


# -- Named library -----------------------------------------------------------


def build_library() -> dict[str, CfkComplex]:
    """Construct the shipped named complexes from their builders."""
    t23 = staircase(torus_knot_exponents(2, 3), name="T(2,3)")
    cable = staircase(cable_exponents(torus_knot_exponents(2, 3), 2, 5), name="T(2,3;2,5)")
    return {
        "unknot": unknot(),
        "T(2,3)": t23,
        "-T(2,3)": mirror(t23),
        "4_1": replace(thin_model(0, 1), name="4_1"),
        "T(2,9)": staircase(torus_knot_exponents(2, 9), name="T(2,9)"),
        "T(4,5)": staircase(torus_knot_exponents(4, 5), name="T(4,5)"),
        "T(2,3;2,5)": cable,
        "-T(2,3;2,5)": mirror(cable),
        "conway": conway_model(),
    }


_FILES = {
    "unknot": "unknot.json",
    "T(2,3)": "t2_3.json",
    "-T(2,3)": "t2_3_mirror.json",
    "4_1": "figure8.json",
    "T(2,9)": "t2_9.json",
    "T(4,5)": "t4_5.json",
    "T(2,3;2,5)": "cable_t23_25.json",
    "-T(2,3;2,5)": "cable_t23_25_mirror.json",
    "conway": "conway.json",
}


def library_names() -> list[str]:
    return list(_FILES)


def load_library(name: str) -> CfkComplex:
    """Load a shipped named complex from its data file."""
    from importlib.resources import files

    from .complexes import parse

    if name not in _FILES:
        raise CfkError(
            f"unknown knot {name!r}; available: {', '.join(library_names())}"
        )
    text = files("cfk.library").joinpath(_FILES[name]).read_text(encoding="utf-8")
    return parse(text)
