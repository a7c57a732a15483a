"""Command line front end.

Exit codes: 0 success, 1 validation or computation failure, 2 usage error.
All output is deterministic for fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .builders import (
    AlexanderExponents,
    cable_exponents,
    library_names,
    load_library,
    staircase,
    torus_knot_exponents,
)
from .complexes import CfkComplex, CfkError, load_file, mirror, serialize, tensor, validate
from .homology import homology, realize
from .invariants import (
    a1_algebraic,
    a1_surgery,
    hook_step_level,
    invariants,
    meridian_filtration,
)
from .regions import (
    Hook,
    HookClipped,
    LHook,
    LHookClipped,
    Region,
    VerticalClipped,
    VerticalSlice,
)
from .suite import run_suite


def _add_inputs(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--knot", action="append", default=[], metavar="NAME",
                    help="library knot name (repeatable); see 'cfk list'")
    sp.add_argument("--file", action="append", default=[], metavar="PATH",
                    help="complex file (repeatable)")


def _resolve_inputs(args, want: int) -> list[CfkComplex]:
    out = [load_library(name) for name in args.knot]
    out += [load_file(path) for path in args.file]
    if len(out) != want:
        raise CfkError(f"expected {want} input complex(es), got {len(out)}")
    return out


def _require_valid(c: CfkComplex) -> CfkComplex:
    validate(c).raise_on_error()
    return c


def _parse_region(text: str) -> Region:
    kind, _, rest = text.partition(":")
    try:
        nums = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise CfkError(f"region arguments must be integers: {text!r}") from None
    table = {
        "vslice": (VerticalSlice, 1),
        "vclip": (VerticalClipped, 2),
        "hook": (Hook, 1),
        "hookclip": (HookClipped, 2),
        "lhook": (LHook, 1),
        "lhookclip": (LHookClipped, 2),
    }
    if kind not in table:
        raise CfkError(f"unknown region kind {kind!r}; one of {', '.join(table)}")
    cls, arity = table[kind]
    if len(nums) != arity:
        raise CfkError(f"region {kind!r} takes {arity} integer(s), e.g. {kind}:0")
    return cls(*nums)


def cmd_list(args) -> int:
    for name in library_names():
        print(name)
    return 0


def cmd_validate(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    rep = validate(c)
    for name, ok in rep.checks.items():
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
    for msg in rep.errors:
        print(f"error: {msg}")
    for msg in rep.warnings:
        print(f"warning: {msg}")
    print("valid" if rep.ok else "invalid")
    return 0 if rep.ok else 1


def cmd_invariants(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    report = invariants(_require_valid(c), n=args.n)
    if args.format == "json":
        print(json.dumps(report.as_dict(), ensure_ascii=False, indent=2))
    else:
        print(report.as_table())
    return 0


def cmd_a1(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    _require_valid(c)
    n = args.n if args.n is not None else 2 * c.genus_bound + 1
    if args.method == "algebraic":
        print(a1_algebraic(c))
        return 0
    if args.method == "surgery":
        print(a1_surgery(c, n))
        return 0
    algebraic = a1_algebraic(c)
    surgery = a1_surgery(c, n)
    if algebraic != surgery:
        raise CfkError(
            f"a1 methods disagree: algebraic {algebraic}, surgery {surgery} (n={n})"
        )
    print(algebraic)
    return 0


def cmd_filtration(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    _require_valid(c)
    hook = realize(c, Hook(args.m))
    rows = []
    for p in hook.points:
        level = meridian_filtration(p.i, p.j, args.m, args.n)
        step = hook_step_level(p, args.m, args.n)
        rows.append((p.gen, p.i, p.j, level.first, level.second, step))
    if args.format == "json":
        print(json.dumps(
            [
                {"gen": g, "i": i, "j": j, "first": a, "second": b, "step": s}
                for g, i, j, a, b, s in rows
            ],
            ensure_ascii=False, indent=2,
        ))
    else:
        header = ("gen", "i", "j", "first", "second", "step")
        widths = [max(len(str(r[k])) for r in rows + [header]) for k in range(6)]
        for r in [header] + rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(r, widths)))
    return 0


def cmd_tensor(args) -> int:
    left, right = (_require_valid(c) for c in _resolve_inputs(args, 2))
    sys.stdout.write(serialize(tensor(left, right)))
    return 0


def cmd_mirror(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    sys.stdout.write(serialize(mirror(_require_valid(c))))
    return 0


def cmd_staircase(args) -> int:
    given = [x for x in (args.exponents, args.torus, args.cable) if x]
    if len(given) != 1:
        raise CfkError("give exactly one of --exponents, --torus, --cable")
    try:
        if args.exponents:
            e = AlexanderExponents(tuple(int(x) for x in args.exponents.split(",")))
            name = None
        elif args.torus:
            p, q = (int(x) for x in args.torus.split(","))
            e = torus_knot_exponents(p, q)
            name = f"T({p},{q})"
        else:
            base_part, _, cable_part = args.cable.partition(";")
            p, q = (int(x) for x in base_part.split(","))
            r, s = (int(x) for x in cable_part.split(","))
            e = cable_exponents(torus_knot_exponents(p, q), r, s)
            name = f"T({p},{q};{r},{s})"
    except ValueError as err:
        raise CfkError(str(err)) from None
    sys.stdout.write(serialize(staircase(e, name=name)))
    return 0


def cmd_realize(args) -> int:
    (c,) = _resolve_inputs(args, 1)
    _require_valid(c)
    region = _parse_region(args.region)
    x = realize(c, region)
    print(f"region {region.describe()}: {x.dim} basis points")
    for k, p in enumerate(x.points):
        targets = [x.points[t.bit_length() - 1] for t in _bits(x.boundary[k])]
        arrow = " -> " + " + ".join(f"[{t.gen},{t.i},{t.j}]" for t in targets) if targets else ""
        print(f"  [{p.gen},{p.i},{p.j}]{arrow}")
    print(f"homology dimension {homology(x).dimension}")
    return 0


def _bits(v: int):
    while v:
        low = v & -v
        yield low
        v ^= low


def cmd_suite(args) -> int:
    ok = run_suite(seed_count=args.seeds, extra_files=args.extra)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfk",
        description="Exact invariants of bifiltered knot chain complexes over F2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("list", help="list library knot names")
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("validate", help="check the axioms of a complex")
    _add_inputs(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("invariants", help="full invariant report")
    _add_inputs(sp)
    sp.add_argument("--n", type=int, default=None, help="cable parameter (default 2g+1)")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("a1", help="the integer concordance refinement")
    _add_inputs(sp)
    sp.add_argument("--method", choices=("algebraic", "surgery", "both"), default="both")
    sp.add_argument("--n", type=int, default=None, help="cable parameter (default 2g+1)")
    sp.set_defaults(func=cmd_a1)

    sp = sub.add_parser("filtration", help="per-point filtration levels on the hook")
    _add_inputs(sp)
    sp.add_argument("--m", type=int, required=True, help="surgery slot")
    sp.add_argument("--n", type=int, required=True, help="cable parameter")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_filtration)

    sp = sub.add_parser("tensor", help="tensor product of two complexes")
    _add_inputs(sp)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("mirror", help="mirror of a complex")
    _add_inputs(sp)
    sp.set_defaults(func=cmd_mirror)

    sp = sub.add_parser("staircase", help="emit a staircase complex")
    sp.add_argument("--exponents", metavar="E0,E1,...", help="alternating exponents")
    sp.add_argument("--torus", metavar="P,Q", help="torus knot parameters")
    sp.add_argument("--cable", metavar="P,Q;R,S", help="(R,S)-cable of the (P,Q) torus knot")
    sp.set_defaults(func=cmd_staircase)

    sp = sub.add_parser("realize", help="debug dump of a region realization")
    _add_inputs(sp)
    sp.add_argument("--region", required=True, metavar="KIND:ARGS",
                    help="vslice:i | vclip:i,jmax | hook:m | hookclip:m,imin"
                         " | lhook:t | lhookclip:t,imax")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("suite", help="run the property suite")
    sp.add_argument("--seeds", type=int, default=50, help="random model count")
    sp.add_argument("extra", nargs="*", help="extra complex files to include")
    sp.set_defaults(func=cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CfkError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
