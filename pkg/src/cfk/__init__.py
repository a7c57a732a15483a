"""Bifiltered knot chain complexes over the two-element field.

Exact models of the full knot complex with its lattice of subquotients,
the meridian-cable filtration on large-surgery complexes, and the
concordance invariants tau, epsilon and a1 computed by two independent
routes that the suite checks against each other.
"""

from .builders import (
    AlexanderExponents,
    box,
    cable_exponents,
    conway_model,
    library_names,
    load_library,
    random_model,
    staircase,
    thin_model,
    torus_knot_exponents,
    unknot,
)
from .complexes import (
    CfkComplex,
    CfkError,
    DiffEntry,
    Generator,
    ParseError,
    ValidationError,
    direct_sum,
    load_file,
    mirror,
    parse,
    serialize,
    tensor,
    validate,
)
from .homology import (
    ChainMap,
    F2Complex,
    HomologyResult,
    homology,
    induced_on_homology,
    is_trivial,
    quotient_then_include,
    realize,
)
from .invariants import (
    BiFiltrationLevel,
    InvariantReport,
    InvariantViolation,
    SearchExhausted,
    a1_algebraic,
    a1_surgery,
    i_filtration_coincides,
    connect_sum_rules,
    epsilon,
    f_map,
    g_map,
    hook_step_level,
    invariants,
    meridian_filtration,
    tau,
)
from .regions import (
    Hook,
    HookClipped,
    LatticePoint,
    LHook,
    LHookClipped,
    Region,
    RegionError,
    VerticalClipped,
    VerticalSlice,
)

__all__ = [
    "AlexanderExponents",
    "BiFiltrationLevel",
    "CfkComplex",
    "CfkError",
    "ChainMap",
    "DiffEntry",
    "F2Complex",
    "Generator",
    "HomologyResult",
    "Hook",
    "HookClipped",
    "InvariantReport",
    "InvariantViolation",
    "LHook",
    "LHookClipped",
    "LatticePoint",
    "ParseError",
    "Region",
    "RegionError",
    "SearchExhausted",
    "ValidationError",
    "VerticalClipped",
    "VerticalSlice",
    "a1_algebraic",
    "a1_surgery",
    "box",
    "cable_exponents",
    "i_filtration_coincides",
    "connect_sum_rules",
    "conway_model",
    "direct_sum",
    "epsilon",
    "f_map",
    "g_map",
    "homology",
    "hook_step_level",
    "induced_on_homology",
    "invariants",
    "is_trivial",
    "library_names",
    "load_file",
    "load_library",
    "meridian_filtration",
    "mirror",
    "parse",
    "quotient_then_include",
    "random_model",
    "realize",
    "serialize",
    "staircase",
    "tau",
    "tensor",
    "thin_model",
    "torus_knot_exponents",
    "unknot",
    "validate",
]
