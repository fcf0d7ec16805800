"""Exact rational invariants of foliated surfaces.

Intersection theory on resolution dual graphs, continued-fraction data of
cyclic quotient points, local Riemann-Roch contributions of foliation
singularities, Zariski decomposition, and the effective pluricanonical-bound
pipeline, all in exact arithmetic. The ``folcalc`` command line exposes every
operation; see the README for the JSON formats.
"""

from .bounds import (
    CANONICAL,
    WEAK_NEF,
    BoundReport,
    HilbertSamples,
    ModelInvariants,
    SingularityConfiguration,
    bound_singularity_count,
    compute_n1,
    enumerate_configurations,
    enumerate_reciprocal_tuples,
    extract_invariants,
    index_bounds,
    pipeline,
    relate_models,
)
from .contributions import (
    Cusp,
    Dihedral,
    DihedralSumReport,
    GorensteinCanonical,
    SingularityDatum,
    Terminal,
    a_cusp,
    a_cyclic_sheaf,
    a_dihedral,
    a_terminal,
    chi_fchain,
    chi_partial_crepant,
    contribution,
    dihedral_sum_verify,
    global_chi,
)
from .cyclic import (
    CyclicType,
    HJExpansion,
    WunramDegrees,
    fchain_profile,
    hj_expansion,
    hj_string_graph,
    wunram_degrees,
)
from .errors import (
    DegenerateConfigurationError,
    FolcalcError,
    InconsistentModelError,
    InconsistentSamplesError,
    NotGeneralTypeError,
    NotPseudoeffectiveError,
    ValidationError,
)
from .jouanolou import (
    AccumulationReport,
    JouanolouEntry,
    accumulation_report,
    jouanolou_entry,
)
from .lattice import (
    Curve,
    DualGraph,
    HodgeReport,
    IntersectionProfile,
    QDivisor,
    chi_additivity_check,
    degree_against_curve,
    hodge_inequality_check,
    intersection_matrix,
    is_negative_definite,
    pair,
    solve_pullback,
)
from .zariski import ZariskiResult, pseudo_threshold, zariski_decompose

__all__ = [
    "AccumulationReport",
    "BoundReport",
    "CANONICAL",
    "Curve",
    "Cusp",
    "CyclicType",
    "DegenerateConfigurationError",
    "Dihedral",
    "DihedralSumReport",
    "DualGraph",
    "FolcalcError",
    "GorensteinCanonical",
    "HJExpansion",
    "HilbertSamples",
    "HodgeReport",
    "InconsistentModelError",
    "InconsistentSamplesError",
    "IntersectionProfile",
    "JouanolouEntry",
    "ModelInvariants",
    "NotGeneralTypeError",
    "NotPseudoeffectiveError",
    "QDivisor",
    "SingularityConfiguration",
    "SingularityDatum",
    "Terminal",
    "ValidationError",
    "WEAK_NEF",
    "WunramDegrees",
    "ZariskiResult",
    "a_cusp",
    "a_cyclic_sheaf",
    "a_dihedral",
    "a_terminal",
    "accumulation_report",
    "bound_singularity_count",
    "chi_additivity_check",
    "chi_fchain",
    "chi_partial_crepant",
    "compute_n1",
    "contribution",
    "degree_against_curve",
    "dihedral_sum_verify",
    "enumerate_configurations",
    "enumerate_reciprocal_tuples",
    "extract_invariants",
    "fchain_profile",
    "global_chi",
    "hj_expansion",
    "hj_string_graph",
    "hodge_inequality_check",
    "index_bounds",
    "intersection_matrix",
    "is_negative_definite",
    "jouanolou_entry",
    "pair",
    "pipeline",
    "pseudo_threshold",
    "relate_models",
    "solve_pullback",
    "wunram_degrees",
    "zariski_decompose",
]
