"""Exact toric-Lagrangian invariants of polytopes.

From a halfspace presentation the package decides the Delzant and Fano
properties, builds the associated quadric system and Lagrangian model in
complex n-space, computes Maslov and area invariants with exact rational
arithmetic, enumerates holomorphic-disc indices for the two parametric
families, and cross-checks the geometry numerically.
"""

from .exactlin import (
    dual_basis,
    hnf,
    invariant_factors,
    kernel_saturated,
    snf,
    solve_linear,
)
from .families import (
    DiscClass,
    FamilyModel,
    InvariantReport,
    disc_spectrum,
    distinguish,
    invariant_m,
    simplex_disc,
    simplex_product_family,
    simplex_product_presentation,
    smooth_isotopy_class_count,
    standard_simplex_product_presentation,
    stretched_disc,
    stretched_family,
    trapezoid_presentation,
    unit_square_presentation,
)
from .lagrangian import (
    GeneratorPairing,
    LagrangianModel,
    TorusData,
    build_model,
    build_model_from_quadrics,
    deck_representatives,
    deck_transform,
    generator_pairing,
    minimal_maslov,
    monotonicity,
    psi_eval,
    psi_eval_complex,
)
from .polytope import (
    DelzantVerdict,
    GateError,
    HalfspacePresentation,
    PresentationReport,
    VertexData,
    combinatorially_equivalent,
    enumerate_vertices,
    fano_constant,
    is_delzant,
    presentation,
    presentation_report,
)
from .quadrics import (
    QuadricSystem,
    TopologyHint,
    membership,
    moment_map,
    nondegenerate,
    polytope_of,
    quadric_system,
    quadrics_of,
    topology_hint,
)
from .verify import (
    DiscSpec,
    SampleSet,
    cycle_area_numeric,
    disc_index_winding,
    exact_cycle_area_coeff,
    lagrangian_residual,
    negative_control,
    perturbed_residual,
    sample_lagrangian,
)

__version__ = "0.1.0"

__all__ = [
    "DelzantVerdict",
    "DiscClass",
    "DiscSpec",
    "FamilyModel",
    "GateError",
    "GeneratorPairing",
    "HalfspacePresentation",
    "InvariantReport",
    "LagrangianModel",
    "PresentationReport",
    "QuadricSystem",
    "SampleSet",
    "TopologyHint",
    "TorusData",
    "VertexData",
    "build_model",
    "build_model_from_quadrics",
    "combinatorially_equivalent",
    "cycle_area_numeric",
    "deck_representatives",
    "deck_transform",
    "disc_index_winding",
    "disc_spectrum",
    "distinguish",
    "dual_basis",
    "enumerate_vertices",
    "exact_cycle_area_coeff",
    "fano_constant",
    "generator_pairing",
    "hnf",
    "invariant_factors",
    "invariant_m",
    "is_delzant",
    "kernel_saturated",
    "lagrangian_residual",
    "simplex_disc",
    "membership",
    "minimal_maslov",
    "moment_map",
    "negative_control",
    "monotonicity",
    "nondegenerate",
    "perturbed_residual",
    "polytope_of",
    "presentation",
    "presentation_report",
    "psi_eval",
    "psi_eval_complex",
    "quadric_system",
    "quadrics_of",
    "sample_lagrangian",
    "simplex_product_family",
    "simplex_product_presentation",
    "smooth_isotopy_class_count",
    "snf",
    "solve_linear",
    "standard_simplex_product_presentation",
    "stretched_disc",
    "stretched_family",
    "topology_hint",
    "trapezoid_presentation",
    "unit_square_presentation",
]
