"""Constant bi-generalized Hermitian structures on flat tori, mode by mode."""
from .hodge import (
    DELTA_INDEX,
    LAPLACIAN_PAIRS,
    AdjointCheck,
    HarmonicResult,
    HodgeForm,
    HodgeFormError,
    Laplacians,
    adjoint_of,
    anticommutators,
    check_adjoint_formulas,
    harmonic_decomposition,
    hodge_inner_product,
    kahler_identities,
    laplacians,
    reality_relations,
)
from .model import (
    FlatBiGcModel,
    MetricSearch,
    ModelParseError,
    ModelValidationError,
    ModelViolation,
    metric_search,
    t2_model,
    t2_structures,
    t4_model,
    validate_model,
)
from .modes import (
    COMPONENTS,
    PAIRS,
    FlatGeometry,
    ModeComplex,
    bidegree_of_slice,
    delta_components,
    geometry,
    mode_operator,
    reindex_to_double_complex,
    slice_of_bidegree,
)
from .torus import (
    PDE_DESCRIPTORS,
    PdeCheck,
    TorusReport,
    diamond_csv,
    diamond_rows,
    diamond_text,
    is_point_symmetric,
    mode_box,
    mode_cohomology,
    pde_slice_check,
    torus_cohomology,
)

__all__ = [
    "FlatBiGcModel", "ModelParseError", "ModelValidationError", "ModelViolation", "validate_model",
    "t2_structures", "t2_model", "t4_model", "MetricSearch", "metric_search",
    "COMPONENTS", "PAIRS", "FlatGeometry", "ModeComplex", "geometry", "mode_operator",
    "delta_components", "reindex_to_double_complex", "slice_of_bidegree", "bidegree_of_slice",
    "HodgeFormError", "HodgeForm", "hodge_inner_product", "adjoint_of", "AdjointCheck",
    "check_adjoint_formulas", "DELTA_INDEX", "LAPLACIAN_PAIRS", "Laplacians", "laplacians",
    "kahler_identities", "HarmonicResult", "harmonic_decomposition", "anticommutators",
    "reality_relations",
    "TorusReport", "mode_box", "mode_cohomology", "torus_cohomology", "PDE_DESCRIPTORS", "PdeCheck",
    "pde_slice_check", "is_point_symmetric", "diamond_rows", "diamond_csv", "diamond_text",
]
