"""Clifford action on forms, pure-spinor gradings, Chevalley pairing and Hodge star."""
from .clifford import (
    SpinorSpace,
    chevalley_matrix,
    chevalley_pairing,
    clifford_act,
    clifford_matrix,
    conj_vector,
    natural_pairing,
    pairing_matrix,
    sigma,
    sigma_matrix,
    spinor_space,
    tilde_sigma,
    tilde_sigma_matrix,
    top_coefficient,
    wedge,
)
from .hodge import HodgeStarError, hodge_star, hodge_star_from_frame, metric_violations, orthonormal_frame
from .structures import (
    Grading,
    StructureError,
    canonical_line,
    grading_operator,
    half_dimension,
    i_eigenbundle,
    joint_grading,
    spin_operator,
    structure_violations,
    u_grading,
    vandermonde_joint_grading,
)

__all__ = [
    "SpinorSpace", "spinor_space", "clifford_matrix", "clifford_act", "natural_pairing",
    "pairing_matrix", "sigma", "sigma_matrix", "tilde_sigma", "tilde_sigma_matrix",
    "chevalley_matrix", "chevalley_pairing", "wedge", "top_coefficient", "conj_vector",
    "HodgeStarError", "hodge_star", "hodge_star_from_frame", "metric_violations", "orthonormal_frame",
    "Grading", "StructureError", "half_dimension", "structure_violations", "i_eigenbundle",
    "canonical_line", "u_grading", "joint_grading", "spin_operator", "grading_operator",
    "vandermonde_joint_grading",
]
