"""Canonical degree-2 covers of blown-up planes: invariants, zones, geography.

The package answers, exactly and deterministically, questions of the shape
"for the double plane branched over a degree-2d curve with s simple
singularities, blown up, what are the invariants, does the canonical map
stay 2-to-1 under deformation, and where does the surface sit in the
(chi, c1^2) plane".  A finite-field interpolation oracle cross-checks
every dimension formula against actual linear systems of plane curves
with fat base points.
"""

from .atlas import (
    Enumeration,
    GeographyLine,
    ScrollWitness,
    TwoComponentPoint,
    UnwitnessedCandidate,
    congruence_ok,
    find_witness,
    geography_lines,
    s_for_degree,
    scroll_class_total,
    two_component_points,
)
from .classify import (
    BlowupPair,
    ClassificationRecord,
    DeformationClass,
    TriState,
    alpha_surjective,
    classify,
    deformation_class,
    ext1_nonzero,
    smooth_cover_exists,
    very_ample,
    zone_rule,
)
from .fatpoints import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    FatPointSystem,
    PointConfiguration,
    PrimeFieldMatrix,
    alpha_rank,
    h0_fatpoints,
    h1_fatpoints,
    monomial_basis,
    speciality_defect,
    vanishing_matrix,
)
from .invariants import (
    ModuliDims,
    SurfaceInvariants,
    chi_tangent_blowup,
    cover_invariants,
    h0_normal_of_cover,
    moduli_dim_degree2,
    moduli_dims_degree1,
)
from .scrolls import (
    SPECIAL_M4_CASE,
    DivisorClass,
    ScrollSpec,
    line_for_m,
    on_line,
    scroll_admissible,
    scroll_line_hits,
    scroll_surface_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupPair",
    "ClassificationRecord",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DeformationClass",
    "DivisorClass",
    "Enumeration",
    "FatPointSystem",
    "GeographyLine",
    "ModuliDims",
    "PointConfiguration",
    "PrimeFieldMatrix",
    "SPECIAL_M4_CASE",
    "ScrollSpec",
    "ScrollWitness",
    "SurfaceInvariants",
    "TriState",
    "TwoComponentPoint",
    "UnwitnessedCandidate",
    "alpha_rank",
    "alpha_surjective",
    "chi_tangent_blowup",
    "classify",
    "congruence_ok",
    "cover_invariants",
    "deformation_class",
    "ext1_nonzero",
    "find_witness",
    "geography_lines",
    "h0_fatpoints",
    "h0_normal_of_cover",
    "h1_fatpoints",
    "line_for_m",
    "moduli_dim_degree2",
    "moduli_dims_degree1",
    "monomial_basis",
    "on_line",
    "s_for_degree",
    "scroll_admissible",
    "scroll_class_total",
    "scroll_line_hits",
    "scroll_surface_invariants",
    "smooth_cover_exists",
    "speciality_defect",
    "two_component_points",
    "vanishing_matrix",
    "very_ample",
    "zone_rule",
]
