"""Splitting a vector into eigencomponents from its Krylov moments."""
from __future__ import annotations

from typing import Sequence

from .matrix import Matrix, SingularMatrixError
from .scalar import as_scalar

__all__ = ["solve_vandermonde", "eigen_components"]


def solve_vandermonde(eigenvalues: Sequence, moments: Sequence[Sequence]) -> list[tuple]:
    """Recover ``v_1..v_m`` from ``moments[r] = sum_q eigenvalues[q]**r * v_q``.

    With ``moments = [u, L u, ..., L^(m-1) u]`` for a diagonalizable ``L`` whose
    distinct eigenvalues are ``eigenvalues``, the result is the eigen-decomposition
    ``u = sum v_q`` with ``L v_q = eigenvalues[q] * v_q``.
    """
    betas = [as_scalar(b) for b in eigenvalues]
    m = len(betas)
    if len(moments) != m:
        raise ValueError(f"need {m} moments, got {len(moments)}")
    if len(set(betas)) != m:
        raise SingularMatrixError("repeated eigenvalues make the Vandermonde system singular")
    if m == 0:
        return []
    vander = Matrix([[b ** r for b in betas] for r in range(m)])
    comps = vander.inverse() @ Matrix(moments)
    return [comps.row(q) for q in range(m)]


def eigen_components(op: Matrix, eigenvalues: Sequence, u: Sequence) -> list[tuple]:
    """Apply :func:`solve_vandermonde` to the moments of ``u`` under ``op``."""
    moments = [tuple(as_scalar(x) for x in u)]
    for _ in range(len(eigenvalues) - 1):
        moments.append(op.apply(moments[-1]))
    return solve_vandermonde(eigenvalues, moments)
