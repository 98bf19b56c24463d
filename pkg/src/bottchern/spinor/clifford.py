"""Forms on ``R^{2n}`` as spinors for ``T ⊕ T*``.

Basis forms are ``dx^I`` for sorted index tuples ``I ⊂ {0..2n-1}``, ordered by
degree and then lexicographically. Signs follow sorted positions:
``dx^j ∧ dx^I = (-1)^{#{i in I : i < j}} dx^{I ∪ j}`` and contraction
``ι_{∂_j}`` removes ``j`` with the sign of its position in ``I``.

Generalized vectors ``X + ξ`` are length-``4n`` coordinate tuples in the basis
``(∂_0..∂_{2n-1}, dx^0..dx^{2n-1})``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ..exact import ZERO, GaussianRational, Matrix, as_scalar
from ..exact.matrix import DimensionError

__all__ = [
    "SpinorSpace",
    "spinor_space",
    "clifford_matrix",
    "clifford_act",
    "natural_pairing",
    "pairing_matrix",
    "sigma_matrix",
    "tilde_sigma_matrix",
    "sigma",
    "tilde_sigma",
    "chevalley_matrix",
    "chevalley_pairing",
    "wedge",
    "top_coefficient",
    "conj_vector",
]


class SpinorSpace:
    """``Λ•(C^{2n})*`` with a fixed basis of multi-indices."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("half-dimension n must be positive")
        self.n = n
        self.m = 2 * n
        self.basis: tuple[tuple[int, ...], ...] = tuple(
            I for k in range(self.m + 1) for I in combinations(range(self.m), k)
        )
        self.index = {I: i for i, I in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.degrees = tuple(len(I) for I in self.basis)

    def __repr__(self):
        return f"SpinorSpace(n={self.n})"

    def form(self, terms: dict[tuple[int, ...], object]) -> tuple:
        """Vector of the form ``sum c_I dx^I`` (indices need not be sorted)."""
        v = [ZERO] * self.dim
        for I, c in terms.items():
            sign, J = _sort_sign(I)
            if sign == 0:
                continue
            v[self.index[J]] = v[self.index[J]] + as_scalar(c) * sign
        return tuple(v)

    def basis_form(self, I: Sequence[int]) -> tuple:
        return self.form({tuple(I): 1})

    def label(self, i: int) -> str:
        I = self.basis[i]
        return "1" if not I else "^".join(f"dx{j}" for j in I)

    @property
    def volume_index(self) -> int:
        return self.dim - 1

    # -- elementary operators ---------------------------------------------
    def wedge_matrix(self, j: int) -> Matrix:
        return _wedge_matrix(self.n, j)

    def contraction_matrix(self, j: int) -> Matrix:
        return _contraction_matrix(self.n, j)

    def degree_matrix(self, fn) -> Matrix:
        return Matrix.diagonal([fn(d) for d in self.degrees])


def _sort_sign(I: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    I = list(I)
    if len(set(I)) != len(I):
        return 0, ()
    sign = 1
    for a in range(len(I)):
        for b in range(a + 1, len(I)):
            if I[a] > I[b]:
                sign = -sign
    return sign, tuple(sorted(I))


@lru_cache(maxsize=None)
def spinor_space(n: int) -> SpinorSpace:
    return SpinorSpace(n)


@lru_cache(maxsize=None)
def _wedge_matrix(n: int, j: int) -> Matrix:
    S = spinor_space(n)
    rows = [[ZERO] * S.dim for _ in range(S.dim)]
    for col, I in enumerate(S.basis):
        if j in I:
            continue
        sign = -1 if sum(1 for i in I if i < j) % 2 else 1
        J = tuple(sorted(I + (j,)))
        rows[S.index[J]][col] = GaussianRational(sign)
    return Matrix._wrap(rows, S.dim)


@lru_cache(maxsize=None)
def _contraction_matrix(n: int, j: int) -> Matrix:
    S = spinor_space(n)
    rows = [[ZERO] * S.dim for _ in range(S.dim)]
    for col, I in enumerate(S.basis):
        if j not in I:
            continue
        pos = I.index(j)
        J = I[:pos] + I[pos + 1:]
        rows[S.index[J]][col] = GaussianRational(-1 if pos % 2 else 1)
    return Matrix._wrap(rows, S.dim)


def _check_vector(n: int, e: Sequence) -> tuple:
    e = tuple(as_scalar(x) for x in e)
    if len(e) != 4 * n:
        raise DimensionError(f"generalized vector must have length {4 * n}, got {len(e)}")
    return e


def clifford_matrix(n: int, e: Sequence) -> Matrix:
    """Matrix of ``φ ↦ (X + ξ)•φ = ι_X φ + ξ ∧ φ`` on the spinor space."""
    e = _check_vector(n, e)
    S = spinor_space(n)
    m = S.m
    acc = [[ZERO] * S.dim for _ in range(S.dim)]
    for j in range(m):
        for coef, op in ((e[j], _contraction_matrix(n, j)), (e[m + j], _wedge_matrix(n, j))):
            if not coef:
                continue
            for r, row in enumerate(op._data):
                for c, x in enumerate(row):
                    if x:
                        acc[r][c] = acc[r][c] + coef * x
    return Matrix._wrap(acc, S.dim)


def clifford_act(n: int, e: Sequence, phi: Sequence) -> tuple:
    return clifford_matrix(n, e).apply(tuple(as_scalar(x) for x in phi))


@lru_cache(maxsize=None)
def pairing_matrix(n: int) -> Matrix:
    """Gram matrix of ``<X+ξ, Y+η> = (ξ(Y) + η(X)) / 2``."""
    m = 2 * n
    half = GaussianRational(Fraction(1, 2))
    rows = [[ZERO] * (2 * m) for _ in range(2 * m)]
    for j in range(m):
        rows[j][m + j] = half
        rows[m + j][j] = half
    return Matrix._wrap(rows, 2 * m)


def natural_pairing(n: int, u: Sequence, v: Sequence) -> GaussianRational:
    u, v = _check_vector(n, u), _check_vector(n, v)
    m = 2 * n
    acc = ZERO
    for j in range(m):
        acc = acc + u[m + j] * v[j] + v[m + j] * u[j]
    return acc * GaussianRational(Fraction(1, 2))


def _sigma_sign(a: int) -> int:
    return (-1) ** (a // 2)


def _tilde_sigma_sign(a: int) -> int:
    return (-1) ** (a // 2) if a % 2 == 0 else (-1) ** ((a + 1) // 2)


@lru_cache(maxsize=None)
def sigma_matrix(n: int) -> Matrix:
    """Degree-``a`` forms times ``(-1)^{a/2}`` (even) or ``(-1)^{(a-1)/2}`` (odd)."""
    return spinor_space(n).degree_matrix(_sigma_sign)


@lru_cache(maxsize=None)
def tilde_sigma_matrix(n: int) -> Matrix:
    """Degree-``a`` forms times ``(-1)^{a/2}`` (even) or ``(-1)^{(a+1)/2}`` (odd)."""
    return spinor_space(n).degree_matrix(_tilde_sigma_sign)


def sigma(n: int, alpha: Sequence) -> tuple:
    return sigma_matrix(n).apply(tuple(as_scalar(x) for x in alpha))


def tilde_sigma(n: int, alpha: Sequence) -> tuple:
    return tilde_sigma_matrix(n).apply(tuple(as_scalar(x) for x in alpha))


def wedge(n: int, alpha: Sequence, beta: Sequence) -> tuple:
    """Exterior product of two forms."""
    S = spinor_space(n)
    out = [ZERO] * S.dim
    for i, a in enumerate(alpha):
        a = as_scalar(a)
        if not a:
            continue
        I = S.basis[i]
        for j, b in enumerate(beta):
            b = as_scalar(b)
            if not b:
                continue
            sign, K = _sort_sign(I + S.basis[j])
            if sign:
                k = S.index[K]
                out[k] = out[k] + a * b * sign
    return tuple(out)


def top_coefficient(n: int, alpha: Sequence) -> GaussianRational:
    return as_scalar(alpha[spinor_space(n).volume_index])


@lru_cache(maxsize=None)
def chevalley_matrix(n: int) -> Matrix:
    """``C`` with ``(α, β)_Ch = α^T C β``, built from the degree-by-degree sum
    ``-Σ_j (-1)^j (α^{2j} ∧ β^{2n-2j} + α^{2j+1} ∧ β^{2n-2j-1})``."""
    S = spinor_space(n)
    rows = [[ZERO] * S.dim for _ in range(S.dim)]
    for i, I in enumerate(S.basis):
        a = len(I)
        coeff = -((-1) ** (a // 2))
        for j, J in enumerate(S.basis):
            if len(J) != S.m - a:
                continue
            sign, K = _sort_sign(I + J)
            if sign and len(K) == S.m:
                rows[i][j] = GaussianRational(coeff * sign)
    return Matrix._wrap(rows, S.dim)


def chevalley_pairing(n: int, alpha: Sequence, beta: Sequence) -> GaussianRational:
    alpha = tuple(as_scalar(x) for x in alpha)
    beta = tuple(as_scalar(x) for x in beta)
    C = chevalley_matrix(n)
    acc = ZERO
    for a, row in zip(alpha, C._data):
        if not a:
            continue
        for c, b in zip(row, beta):
            if c and b:
                acc = acc + a * c * b
    return acc


def conj_vector(v: Sequence) -> tuple:
    return tuple(as_scalar(x).conjugate() for x in v)

