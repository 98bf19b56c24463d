"""Generalized complex structures as ``4n x 4n`` matrices and the spinor gradings they induce.

``J`` acts on coordinate columns of ``T ⊕ T*`` in the basis
``(∂_0..∂_{2n-1}, dx^0..dx^{2n-1})``. The ``+i`` eigenbundle ``L`` annihilates a
pure spinor line ``U^n``; ``U^{n-k}`` is spanned by ``k``-fold Clifford
products of ``L̄`` applied to that line.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from ..exact import (
    I,
    GaussianRational,
    Matrix,
    Subspace,
    eigen_components,
    kernel_basis,
    subspace_intersection,
    sum_all,
)
from .clifford import clifford_matrix, pairing_matrix, spinor_space

__all__ = [
    "StructureError",
    "Grading",
    "half_dimension",
    "structure_violations",
    "i_eigenbundle",
    "canonical_line",
    "u_grading",
    "joint_grading",
    "spin_operator",
    "grading_operator",
    "vandermonde_joint_grading",
]


class StructureError(ValueError):
    """A structure matrix fails an identity it must satisfy."""


def half_dimension(J: Matrix) -> int:
    if not J.is_square() or J.rows % 4 or J.rows == 0:
        raise StructureError(f"structure matrix must be 4n x 4n, got {J.rows}x{J.cols}")
    return J.rows // 4


def structure_violations(J: Matrix, name: str = "J") -> list[str]:
    """Failed identities among ``J^2 = -I`` and ``J^T P J = P``."""
    n = half_dimension(J)
    P = pairing_matrix(n)
    out = []
    if J @ J != -Matrix.identity(4 * n):
        out.append(f"{name}^2 != -I")
    if J.T @ P @ J != P:
        out.append(f"{name} does not preserve the natural pairing")
    return out


@dataclass(frozen=True)
class Grading:
    """Decomposition of the spinor space into pieces labelled by ``p`` or ``(p, q)``."""

    n: int
    pieces: Mapping

    def dims(self) -> dict:
        return {k: v.dim for k, v in self.pieces.items()}

    def nonzero(self) -> dict:
        return {k: v for k, v in self.pieces.items() if v.dim}

    def __getitem__(self, key) -> Subspace:
        amb = spinor_space(self.n).dim
        return self.pieces.get(key, Subspace.zero(amb))

    def is_direct(self) -> bool:
        amb = spinor_space(self.n).dim
        spaces = list(self.pieces.values())
        total = sum(s.dim for s in spaces)
        return total == amb and sum_all(spaces).dim == amb

    def basis_matrix(self) -> tuple[Matrix, dict]:
        """All piece bases side by side, and the column range of each key."""
        cols, ranges, off = [], {}, 0
        for k, s in self.pieces.items():
            vs = s.vectors()
            cols.extend(vs)
            ranges[k] = range(off, off + len(vs))
            off += len(vs)
        return Matrix.from_columns(cols, spinor_space(self.n).dim), ranges


def i_eigenbundle(J: Matrix) -> Subspace:
    """``L = ker(J - i)``, checked to be maximal isotropic."""
    bad = structure_violations(J)
    if bad:
        raise StructureError("; ".join(bad))
    n = half_dimension(J)
    L = kernel_basis(J - Matrix.identity(4 * n).scale(I))
    B = L.basis
    if L.dim != 2 * n or not (B.T @ pairing_matrix(n) @ B).is_zero():
        raise StructureError("+i eigenbundle is not maximal isotropic")
    return L


def canonical_line(J: Matrix) -> Subspace:
    """Joint kernel of the Clifford action of ``L``; must be a line."""
    n = half_dimension(J)
    L = i_eigenbundle(J)
    stacked = Matrix.zeros(0, spinor_space(n).dim).vstack(*(clifford_matrix(n, v) for v in L.vectors()))
    line = kernel_basis(stacked)
    if line.dim != 1:
        raise StructureError(f"Clifford annihilator of L has dimension {line.dim}, expected 1")
    return line


def u_grading(J: Matrix) -> Grading:
    """``U^{n-k} = Λ^k L̄ • U^n`` for ``k = 0..2n``."""
    n = half_dimension(J)
    S = spinor_space(n)
    (rho,) = canonical_line(J).vectors()
    lbar = [clifford_matrix(n, v) for v in i_eigenbundle(J).conjugate().vectors()]
    pieces = {}
    for k in range(2 * n, -1, -1):
        vecs = []
        for idx in combinations(range(2 * n), k):
            v = rho
            for j in reversed(idx):
                v = lbar[j].apply(v)
            vecs.append(v)
        pieces[n - k] = Subspace(S.dim, vecs)
    g = Grading(n, pieces)
    if not g.is_direct():
        raise StructureError("L̄ products do not decompose the spinor space")
    return g


def _check_commuting(J1: Matrix, J2: Matrix):
    if J1.shape != J2.shape:
        raise StructureError("structures act on different spaces")
    if J1 @ J2 != J2 @ J1:
        raise StructureError("J1 J2 != J2 J1")


def joint_grading(J1: Matrix, J2: Matrix) -> Grading:
    """``U^{p,q} = U^p_1 ∩ U^q_2`` over ``-n <= p, q <= n``."""
    _check_commuting(J1, J2)
    n = half_dimension(J1)
    g1, g2 = u_grading(J1), u_grading(J2)
    pieces = {}
    for p in range(-n, n + 1):
        for q in range(-n, n + 1):
            s = subspace_intersection(g1[p], g2[q])
            if s.dim:
                pieces[(p, q)] = s
    g = Grading(n, pieces)
    if not g.is_direct():
        raise StructureError("joint pieces do not decompose the spinor space")
    return g


def spin_operator(J: Matrix) -> Matrix:
    """Infinitesimal spin action ``½ Σ_j [(J∂_j)•dx^j• + (J dx^j)•∂_j•]``.

    This is the Clifford-algebra image of ``J`` as an element of ``so(T ⊕ T*)``;
    it acts on ``U^p`` by ``ip``. It is built without the canonical line, so it
    gives an independent route to the grading.
    """
    n = half_dimension(J)
    m = 2 * n
    acc = Matrix.zeros(spinor_space(n).dim, spinor_space(n).dim)
    half = GaussianRational(1, 0) / 2
    for j in range(m):
        dj = [0] * (2 * m)
        dj[j] = 1
        xj = [0] * (2 * m)
        xj[m + j] = 1
        acc = acc + clifford_matrix(n, J.apply(dj)) @ clifford_matrix(n, xj)
        acc = acc + clifford_matrix(n, J.apply(xj)) @ clifford_matrix(n, dj)
    return acc.scale(half)


def grading_operator(g: Grading) -> Matrix:
    """Diagonal operator ``ip`` on ``U^p`` in spinor coordinates."""
    B, ranges = g.basis_matrix()
    diag = [None] * B.cols
    for p, r in ranges.items():
        for c in r:
            diag[c] = I * p
    return B @ Matrix.diagonal(diag) @ B.inverse()


def vandermonde_joint_grading(J1: Matrix, J2: Matrix, op2: Matrix | None = None) -> Grading:
    """Split each ``U^p_1`` into ``J2`` eigencomponents by Vandermonde inversion.

    ``op2`` defaults to :func:`spin_operator` of ``J2``.
    """
    _check_commuting(J1, J2)
    n = half_dimension(J1)
    op = spin_operator(J2) if op2 is None else op2
    qs = list(range(-n, n + 1))
    betas = [I * q for q in qs]
    amb = spinor_space(n).dim
    g1 = u_grading(J1)
    pieces = {}
    for p in range(-n, n + 1):
        comps = {q: [] for q in qs}
        for u in g1[p].vectors():
            for q, v in zip(qs, eigen_components(op, betas, u)):
                comps[q].append(v)
        for q in qs:
            s = Subspace(amb, comps[q])
            if s.dim:
                pieces[(p, q)] = s
    return Grading(n, pieces)

