"""Exact linear algebra over the Gaussian rationals ``Q(i)``."""
from .matrix import DimensionError, Matrix, SingularMatrixError, rank, rref
from .scalar import I, ONE, ZERO, GaussianRational, ScalarParseError, as_scalar, parse_scalar
from .subspace import (
    ContainmentError,
    Subspace,
    complement,
    image_basis,
    intersect_all,
    kernel_basis,
    quotient_dim,
    subspace_intersection,
    subspace_sum,
    sum_all,
)
from .vandermonde import eigen_components, solve_vandermonde

__all__ = [
    "GaussianRational", "ScalarParseError", "parse_scalar", "as_scalar", "ZERO", "ONE", "I",
    "Matrix", "DimensionError", "SingularMatrixError", "rref", "rank",
    "Subspace", "ContainmentError", "kernel_basis", "image_basis", "subspace_sum",
    "subspace_intersection", "quotient_dim", "complement", "intersect_all", "sum_all",
    "solve_vandermonde", "eigen_components",
]
