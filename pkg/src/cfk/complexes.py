"""Finitely generated bifiltered chain complexes over the two-element field.

A complex is a finite set of generators, each carrying an Alexander grading
(and optionally a Maslov grading), together with differential entries of the
form ``d(src) += U^k * dst``.  A generator ``x`` occupies the lattice points
``[x, i, i + A(x)]``; multiplication by U shifts a point to ``(i-1, j-1)``.
All structural operations return new immutable values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from . import gf2


class CfkError(Exception):
    """Base error for this package."""


class ParseError(CfkError):
    """Malformed complex text: syntax or structural problems."""


class ValidationError(CfkError):
    """A structurally well-formed complex violating an algebraic axiom."""


@dataclass(frozen=True)
class Generator:
    id: str
    alexander: int
    maslov: int | None = None


@dataclass(frozen=True)
class DiffEntry:
    """One differential term: d(src) contains U^upower * dst."""

    src: str
    dst: str
    upower: int


@dataclass(frozen=True)
class CfkComplex:
    """Immutable complex; generators and entries are kept in canonical order.

    Canonical order is (alexander descending, id ascending) for generators
    and (src, dst, upower) for differential entries, matching the on-disk
    serialization, so structurally equal complexes compare equal.
    """

    name: str
    generators: tuple[Generator, ...] = field(default_factory=tuple)
    differential: tuple[DiffEntry, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        gens = tuple(sorted(self.generators, key=lambda g: (-g.alexander, g.id)))
        entries = tuple(sorted(self.differential, key=lambda e: (e.src, e.dst, e.upower)))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "differential", entries)

    @cached_property
    def index(self) -> dict[str, int]:
        return {g.id: k for k, g in enumerate(self.generators)}

    @cached_property
    def by_id(self) -> dict[str, Generator]:
        return {g.id: g for g in self.generators}

    @cached_property
    def entries_from(self) -> dict[str, tuple[DiffEntry, ...]]:
        out: dict[str, list[DiffEntry]] = {g.id: [] for g in self.generators}
        for e in self.differential:
            out.setdefault(e.src, []).append(e)
        return {k: tuple(v) for k, v in out.items()}

    def alexander(self, gid: str) -> int:
        return self.by_id[gid].alexander

    @property
    def maslov_present(self) -> bool:
        return bool(self.generators) and all(g.maslov is not None for g in self.generators)

    @property
    def genus_bound(self) -> int:
        """max |A(x)|; an upper bound for every search the invariants run."""
        return max((abs(g.alexander) for g in self.generators), default=0)

    def vertical_homology_dim(self) -> int:
        """Dimension of the homology of the upower-0 part of the differential."""
        idx = self.index
        cols = [0] * len(self.generators)
        for e in self.differential:
            if e.upower == 0 and e.src in idx and e.dst in idx:
                cols[idx[e.src]] ^= 1 << idx[e.dst]
        return len(self.generators) - 2 * gf2.rank(cols)

    def structure(self) -> tuple:
        """Name-independent content, for structural equality in tests."""
        return (self.generators, self.differential)


@dataclass
class ValidationReport:
    """Pass/fail per axiom, with entry-level error messages.

    ``checks`` only contains the checks that actually ran; structural
    failures suppress the algebraic checks that depend on them.
    """

    checks: dict[str, bool] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_on_error(self) -> None:
        if self.errors:
            raise ValidationError("; ".join(self.errors))

    def _record(self, name: str, problems: list[str]) -> None:
        self.checks[name] = not problems
        self.errors.extend(problems)


def validate(complex: CfkComplex) -> ValidationReport:
    """Check every axiom of the data model and report per-invariant results.

    The Alexander-grading symmetry of the multiset {A(x)} is reported as a
    warning only: subquotient machinery does not rely on it.
    """
    rep = ValidationReport()
    gens = complex.generators

    seen: set[str] = set()
    dup = []
    for g in gens:
        if g.id in seen:
            dup.append(f"duplicate generator id {g.id!r}")
        seen.add(g.id)
    rep._record("unique-ids", dup)

    with_m = [g for g in gens if g.maslov is not None]
    uniform = not with_m or len(with_m) == len(gens)
    rep._record(
        "maslov-uniform",
        [] if uniform else ["maslov grading present on some generators but not all"],
    )

    ids = {g.id for g in gens}
    bad_refs = []
    for e in complex.differential:
        for gid in (e.src, e.dst):
            if gid not in ids:
                bad_refs.append(f"entry {e.src}->{e.dst}: unknown generator {gid!r}")
    rep._record("entry-references", bad_refs)

    dup_entries = []
    seen_entries: set[DiffEntry] = set()
    for e in complex.differential:
        if e in seen_entries:
            dup_entries.append(f"duplicate entry {e.src}->{e.dst} U^{e.upower}")
        seen_entries.add(e)
    rep._record("no-duplicate-entries", dup_entries)

    rep._record(
        "upower-nonnegative",
        [
            f"entry {e.src}->{e.dst}: negative upower {e.upower}"
            for e in complex.differential
            if e.upower < 0
        ],
    )

    if not rep.ok:
        return rep

    by_id = complex.by_id
    alex_bad = []
    for e in complex.differential:
        if by_id[e.dst].alexander > by_id[e.src].alexander + e.upower:
            alex_bad.append(
                f"entry {e.src}->{e.dst} U^{e.upower}: alexander grading rises"
            )
    rep._record("alexander-rule", alex_bad)

    if with_m:
        maslov_bad = []
        for e in complex.differential:
            want = by_id[e.src].maslov - 1 + 2 * e.upower
            if by_id[e.dst].maslov != want:
                maslov_bad.append(
                    f"entry {e.src}->{e.dst} U^{e.upower}: maslov {by_id[e.dst].maslov}"
                    f" != {want}"
                )
        rep._record("maslov-rule", maslov_bad)

    # d^2 = 0 as U-monomials: every composite term must occur an even number
    # of times.  This is the symbolic check, independent of any lattice
    # realization.
    parity: dict[tuple[str, str, int], int] = {}
    from_map = complex.entries_from
    for e1 in complex.differential:
        for e2 in from_map.get(e1.dst, ()):
            key = (e1.src, e2.dst, e1.upower + e2.upower)
            parity[key] = parity.get(key, 0) ^ 1
    rep._record(
        "d-squared",
        [f"d^2 term {s}->{t} U^{u} survives" for (s, t, u), p in sorted(parity.items()) if p],
    )

    dim = complex.vertical_homology_dim()
    rep._record(
        "vertical-homology-rank",
        [] if dim == 1 else [f"vertical homology has dimension {dim}, expected 1"],
    )

    alex = sorted(g.alexander for g in gens)
    if alex != sorted(-a for a in alex):
        rep.warnings.append("alexander gradings are not symmetric under negation")

    return rep


def mirror(complex: CfkComplex) -> CfkComplex:
    """Dual complex: reverse every entry, negate both gradings.

    Reversing an entry keeps its U power, so the grading rules hold again
    after negation; applying mirror twice gives back an equal complex.
    """
    name = complex.name[1:] if complex.name.startswith("-") else "-" + complex.name
    gens = tuple(
        Generator(g.id, -g.alexander, None if g.maslov is None else -g.maslov)
        for g in complex.generators
    )
    entries = tuple(DiffEntry(e.dst, e.src, e.upower) for e in complex.differential)
    return CfkComplex(name, gens, entries)


def tensor(a: CfkComplex, b: CfkComplex) -> CfkComplex:
    """Tensor product over the U ring; models the connect sum.

    Generators are pairs with gradings added; the differential follows the
    Leibniz rule (no signs over the two-element field).
    """
    keep_maslov = a.maslov_present and b.maslov_present

    def pair(x: Generator, y: Generator) -> Generator:
        m = x.maslov + y.maslov if keep_maslov else None
        return Generator(f"{x.id}⊗{y.id}", x.alexander + y.alexander, m)

    gens = tuple(pair(x, y) for x in a.generators for y in b.generators)
    if len({g.id for g in gens}) != len(gens):
        raise CfkError("tensor would produce colliding generator ids")
    entries = []
    for e in a.differential:
        for y in b.generators:
            entries.append(DiffEntry(f"{e.src}⊗{y.id}", f"{e.dst}⊗{y.id}", e.upower))
    for e in b.differential:
        for x in a.generators:
            entries.append(DiffEntry(f"{x.id}⊗{e.src}", f"{x.id}⊗{e.dst}", e.upower))
    return CfkComplex(f"{a.name} # {b.name}", gens, tuple(entries))


def direct_sum(a: CfkComplex, b: CfkComplex) -> CfkComplex:
    """Disjoint union of two complexes.

    Exactly one summand may carry the one-dimensional vertical homology;
    the other must be acyclic in the vertical direction, otherwise the sum
    could not satisfy the rank-one axiom and is refused.
    """
    overlap = {g.id for g in a.generators} & {g.id for g in b.generators}
    if overlap:
        raise CfkError(f"direct sum id collision: {sorted(overlap)}")
    dims = sorted((a.vertical_homology_dim(), b.vertical_homology_dim()))
    if dims != [0, 1]:
        raise CfkError(
            f"direct sum vertical homology dimensions {dims} (need one 1 and one 0)"
        )
    return CfkComplex(
        f"{a.name} + {b.name}",
        a.generators + b.generators,
        a.differential + b.differential,
    )


def to_dict(complex: CfkComplex) -> dict:
    gens = []
    for g in complex.generators:
        d = {"id": g.id, "alexander": g.alexander}
        if g.maslov is not None:
            d["maslov"] = g.maslov
        gens.append(d)
    entries = [
        {"from": e.src, "to": e.dst, "upower": e.upower} for e in complex.differential
    ]
    return {"name": complex.name, "generators": gens, "differential": entries}


def serialize(complex: CfkComplex) -> str:
    """Canonical text form; parse . serialize is the identity on canonical text."""
    return json.dumps(to_dict(complex), ensure_ascii=False, indent=2) + "\n"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


def parse(text: str) -> CfkComplex:
    """Read a complex from its text form.

    Raises ParseError for syntax and structural problems (bad types,
    duplicate ids, entries naming unknown generators).  Algebraic axioms
    are checked separately by validate().
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None

    _require(isinstance(data, dict), "top level must be an object")
    for key in ("name", "generators", "differential"):
        _require(key in data, f"missing field {key!r}")
    _require(isinstance(data["name"], str), "field 'name' must be a string")
    _require(isinstance(data["generators"], list), "field 'generators' must be a list")
    _require(isinstance(data["differential"], list), "field 'differential' must be a list")

    gens = []
    seen: set[str] = set()
    for k, raw in enumerate(data["generators"]):
        where = f"generator {k}"
        _require(isinstance(raw, dict), f"{where}: must be an object")
        _require(isinstance(raw.get("id"), str), f"{where}: field 'id' must be a string")
        _require(
            isinstance(raw.get("alexander"), int) and not isinstance(raw["alexander"], bool),
            f"{where}: field 'alexander' must be an integer",
        )
        m = raw.get("maslov")
        _require(
            m is None or (isinstance(m, int) and not isinstance(m, bool)),
            f"{where}: field 'maslov' must be an integer",
        )
        _require(raw["id"] not in seen, f"duplicate generator id {raw['id']!r}")
        seen.add(raw["id"])
        gens.append(Generator(raw["id"], raw["alexander"], m))

    entries = []
    for k, raw in enumerate(data["differential"]):
        where = f"differential entry {k}"
        _require(isinstance(raw, dict), f"{where}: must be an object")
        for f in ("from", "to"):
            _require(isinstance(raw.get(f), str), f"{where}: field {f!r} must be a string")
            _require(raw[f] in seen, f"{where}: unknown generator {raw[f]!r}")
        _require(
            isinstance(raw.get("upower"), int) and not isinstance(raw["upower"], bool),
            f"{where}: field 'upower' must be an integer",
        )
        entries.append(DiffEntry(raw["from"], raw["to"], raw["upower"]))

    return CfkComplex(data["name"], tuple(gens), tuple(entries))


def load_file(path: str) -> CfkComplex:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse(text)
