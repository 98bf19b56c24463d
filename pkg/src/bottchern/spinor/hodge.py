"""Generalized metrics and the generalized Hodge star ``⋆ = -e_{2n}•…•e_1``."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

from ..exact import GaussianRational, Matrix, as_scalar, kernel_basis
from .clifford import clifford_matrix, pairing_matrix, spinor_space
from .structures import half_dimension

__all__ = [
    "HodgeStarError",
    "metric_violations",
    "positive_eigenspace",
    "orthonormal_frame",
    "hodge_star",
    "hodge_star_from_frame",
]


class HodgeStarError(ValueError):
    pass


def _is_positive_definite(M: Matrix) -> bool:
    """Exact test for a real symmetric matrix via its pivots (all must be > 0)."""
    rows = M.row_list()
    n = len(rows)
    for c in range(n):
        piv = rows[c][c]
        if not piv.is_real() or piv.real <= 0:
            return False
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c] * inv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return True


def metric_violations(G: Matrix) -> list[str]:
    """Failed conditions for a generalized metric: real, orthogonal, self-adjoint, positive."""
    n = half_dimension(G)
    P = pairing_matrix(n)
    out = []
    if not G.is_real():
        out.append("G has non-real entries")
    if G.T @ P @ G != P:
        out.append("G is not orthogonal for the natural pairing")
    if G.T @ P != P @ G:
        out.append("G is not self-adjoint for the natural pairing")
    elif not out and not _is_positive_definite(P @ G):
        out.append("<Ge, e> is not positive definite")
    return out


def positive_eigenspace(G: Matrix) -> list[tuple]:
    n = half_dimension(G)
    vs = kernel_basis(G - Matrix.identity(4 * n)).vectors()
    if len(vs) != 2 * n:
        raise HodgeStarError(f"V+ has dimension {len(vs)}, expected {2 * n}")
    return vs


def _pair(P: Matrix, u, v) -> GaussianRational:
    return sum((a * b for a, b in zip(u, P.apply(v))), GaussianRational(0))


def _rational_sqrt(x: Fraction) -> Fraction:
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise HodgeStarError(f"normalization needs sqrt({x}), which is irrational")
    return Fraction(rn, rd)


def _orientation_sign(n: int, frame: Sequence[Sequence]) -> int:
    proj = Matrix.from_columns([tuple(v)[: 2 * n] for v in frame], 2 * n)
    d = proj.det()
    if not d:
        raise HodgeStarError("V+ does not project isomorphically onto TM")
    return 1 if d.real > 0 else -1


def orthonormal_frame(G: Matrix) -> tuple[list[tuple], Fraction]:
    """Positive orthogonal basis ``f_i`` of ``V+`` and ``s = sqrt(Π <f_i, f_i>)``.

    The ``f_i`` come from Gram-Schmidt over ``Q``; ``e_i = f_i / |f_i|`` is the
    orthonormal frame, and only the product of the norms has to be rational.
    """
    bad = metric_violations(G)
    if bad:
        raise HodgeStarError("; ".join(bad))
    n = half_dimension(G)
    P = pairing_matrix(n)
    fs: list[tuple] = []
    norms: list[GaussianRational] = []
    for v in positive_eigenspace(G):
        w = list(v)
        for f, c in zip(fs, norms):
            coef = _pair(P, v, f) / c
            w = [a - coef * b for a, b in zip(w, f)]
        fs.append(tuple(w))
        norms.append(_pair(P, w, w))
    if _orientation_sign(n, fs) < 0:
        fs[0] = tuple(-a for a in fs[0])
    prod = Fraction(1)
    for c in norms:
        prod *= c.real
    return fs, _rational_sqrt(prod)


def hodge_star_from_frame(n: int, frame: Sequence[Sequence], scale=1) -> Matrix:
    """``-(1/scale) f_{2n}•…•f_1`` for an orthogonal frame whose norms multiply to ``scale²``."""
    S = spinor_space(n)
    acc = Matrix.identity(S.dim)
    for f in frame:
        acc = clifford_matrix(n, [as_scalar(x) for x in f]) @ acc
    return acc.scale(-1 / as_scalar(scale))


def hodge_star(G: Matrix) -> Matrix:
    """Matrix of the generalized Hodge star for the metric ``G``.

    The orientation is the standard one of the coordinate model: a frame of
    ``V+`` is positive when its projection to ``TM`` has positive determinant.
    """
    fs, s = orthonormal_frame(G)
    return hodge_star_from_frame(half_dimension(G), fs, s)
