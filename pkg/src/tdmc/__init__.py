"""Exact-arithmetic classification of module categories over twisted Drinfeld doubles."""

from __future__ import annotations

from .cohomology import (
    Cochain,
    CohomologyGroup,
    build_tilde_omega,
    coboundary,
    cochain_from_dict,
    cochain_to_dict,
    cohomology_cstar,
    cohomology_mod,
    is_cocycle,
    is_trivial_over_cstar,
    pullback,
    restrict,
    solve_trivialization,
)
from .errors import (
    BadGroupSpec,
    DegreeOverflow,
    ElementOutOfRange,
    FormulaNotClosed,
    NonAssociative,
    NotACocycle,
    NotAGroup,
    NotASubgroup,
    NotTrivializing,
    SizeBound,
    TdmcError,
    UnknownBuiltin,
    UsageError,
    WrongAmbient,
)
from .groups import (
    DirectSquare,
    FiniteGroup,
    Subgroup,
    builtin_names,
    conjugacy_classes,
    direct_square_with_diagonal,
    double_cosets,
    group_from_spec,
    orbit_decomposition,
    subgroups_up_to_conjugacy,
)
from .modcat import (
    AmbientContext,
    ClassificationReport,
    DoubleContext,
    PairHPsi,
    RankBreakdown,
    ambient_context,
    bimodule_rank,
    classify_pairs,
    diagonal_pair,
    double_context,
    fiber_functors,
    is_fiber_functor,
    make_pair,
    module_rank_double,
    pair_from_coords,
    psi_g,
    transport_pair,
)
from .twisted_algebra import TwistedAlgebra, is_nondegenerate, projective_irrep_count
from .verification import census_labels, verify_reference_tables

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # groups
    "FiniteGroup",
    "Subgroup",
    "DirectSquare",
    "builtin_names",
    "group_from_spec",
    "conjugacy_classes",
    "subgroups_up_to_conjugacy",
    "direct_square_with_diagonal",
    "double_cosets",
    "orbit_decomposition",
    # cohomology
    "Cochain",
    "CohomologyGroup",
    "coboundary",
    "is_cocycle",
    "restrict",
    "pullback",
    "build_tilde_omega",
    "cohomology_mod",
    "cohomology_cstar",
    "is_trivial_over_cstar",
    "solve_trivialization",
    "cochain_to_dict",
    "cochain_from_dict",
    # twisted group algebras
    "TwistedAlgebra",
    "projective_irrep_count",
    "is_nondegenerate",
    # module categories
    "AmbientContext",
    "DoubleContext",
    "PairHPsi",
    "RankBreakdown",
    "ClassificationReport",
    "ambient_context",
    "double_context",
    "make_pair",
    "diagonal_pair",
    "transport_pair",
    "psi_g",
    "bimodule_rank",
    "module_rank_double",
    "classify_pairs",
    "pair_from_coords",
    "is_fiber_functor",
    "fiber_functors",
    # reference checks
    "census_labels",
    "verify_reference_tables",
    # errors
    "TdmcError",
    "NonAssociative",
    "NotAGroup",
    "UnknownBuiltin",
    "SizeBound",
    "ElementOutOfRange",
    "NotASubgroup",
    "WrongAmbient",
    "DegreeOverflow",
    "NotACocycle",
    "NotTrivializing",
    "FormulaNotClosed",
    "BadGroupSpec",
    "UsageError",
]
