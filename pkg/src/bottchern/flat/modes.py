"""Fourier-mode reduction of ``d`` and its four bidegree components.

On the character ``e^{ik·x}`` the exterior derivative acts on constant-coefficient
forms as wedge by ``iκ`` with ``κ = Σ k_j dx^j``. All mode operators are stored
in slice coordinates: the columns of ``FlatGeometry.B`` are bases of the
``U^{p,q}`` concatenated in key order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Sequence

from ..double_complex import DoubleComplex
from ..exact import I, ZERO, GaussianRational, Matrix
from ..spinor import joint_grading, spinor_space
from .model import FlatBiGcModel

__all__ = [
    "COMPONENTS",
    "PAIRS",
    "FlatGeometry",
    "ModeComplex",
    "geometry",
    "mode_operator",
    "delta_components",
    "reindex_to_double_complex",
    "slice_of_bidegree",
    "bidegree_of_slice",
]

Key = tuple[int, int]
# name -> bidegree shift on (p, q)
COMPONENTS: dict[str, Key] = {
    "delta_plus": (1, 1),
    "delta_minus": (1, -1),
    "delta_bar_plus": (-1, -1),
    "delta_bar_minus": (-1, 1),
}
Pair = Literal["pp", "pb", "bp", "bb"]
PAIRS: dict[str, tuple[str, str]] = {
    "pp": ("delta_plus", "delta_minus"),
    "pb": ("delta_plus", "delta_bar_minus"),
    "bp": ("delta_bar_plus", "delta_minus"),
    "bb": ("delta_bar_plus", "delta_bar_minus"),
}


class FlatGeometry:
    """Model data shared by every mode: grading, adapted basis, wedge operators."""

    def __init__(self, model: FlatBiGcModel):
        model.require_valid()
        self.model = model
        self.n = model.n
        self.space = spinor_space(model.n)
        self.grading = joint_grading(model.J1, model.J2)
        self.keys: list[Key] = sorted(self.grading.pieces)
        cols, self.ranges, off = [], {}, 0
        for key in self.keys:
            vs = self.grading.pieces[key].vectors()
            cols.extend(vs)
            self.ranges[key] = range(off, off + len(vs))
            off += len(vs)
        self.dim = off
        self.B = Matrix.from_columns(cols, self.space.dim)
        self.Binv = self.B.inverse()
        self.slice_of = [None] * self.dim
        for key, r in self.ranges.items():
            for c in r:
                self.slice_of[c] = key
        # wedge by dx^j in slice coordinates
        self.wedges = [self.Binv @ self.space.wedge_matrix(j) @ self.B for j in range(2 * self.n)]
        self._check_neighbours()

    def _check_neighbours(self):
        allowed = set(COMPONENTS.values())
        for W in self.wedges:
            for r in range(self.dim):
                for c in range(self.dim):
                    if W[r, c]:
                        (p, q), (tp, tq) = self.slice_of[c], self.slice_of[r]
                        if (tp - p, tq - q) not in allowed:
                            raise AssertionError(f"d maps U^{p},{q} into U^{tp},{tq}")

    def dims(self) -> dict[Key, int]:
        return {k: len(r) for k, r in self.ranges.items()}

    def to_spinor(self, M: Matrix) -> Matrix:
        return self.B @ M @ self.Binv

    def from_spinor(self, M: Matrix) -> Matrix:
        return self.Binv @ M @ self.B

    def block(self, M: Matrix, src: Key, tgt: Key) -> Matrix:
        if src not in self.ranges or tgt not in self.ranges:
            return Matrix.zeros(len(self.ranges.get(tgt, ())), len(self.ranges.get(src, ())))
        return M.submatrix(list(self.ranges[tgt]), list(self.ranges[src]))

    def slice_columns(self, key: Key) -> list[tuple]:
        """Unit coordinate vectors of ``U^{p,q}``."""
        out = []
        for c in self.ranges.get(key, ()):
            v = [ZERO] * self.dim
            v[c] = GaussianRational(1)
            out.append(tuple(v))
        return out

    def component_mask(self, M: Matrix, shift: Key) -> Matrix:
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for r in range(self.dim):
            tp, tq = self.slice_of[r]
            for c in range(self.dim):
                x = M[r, c]
                if x:
                    p, q = self.slice_of[c]
                    if (tp - p, tq - q) == shift:
                        rows[r][c] = x
        return Matrix._wrap(rows, self.dim)

    @cached_property
    def wedge_components(self) -> dict[str, list[Matrix]]:
        return {name: [self.component_mask(W, s) for W in self.wedges] for name, s in COMPONENTS.items()}


_GEOMETRY: dict = {}


def geometry(model: FlatBiGcModel) -> FlatGeometry:
    key = (model.J1, model.J2, model.G)
    if key not in _GEOMETRY:
        _GEOMETRY[key] = FlatGeometry(model)
    return _GEOMETRY[key]


def _check_mode(g: FlatGeometry, k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if len(k) != 2 * g.n:
        raise ValueError(f"mode must have {2 * g.n} integer entries, got {len(k)}")
    return k


def _combine(mats: Sequence[Matrix], k: Sequence[int], size: int) -> Matrix:
    acc = Matrix.zeros(size, size)
    for kj, W in zip(k, mats):
        if kj:
            acc = acc + W.scale(I * kj)
    return acc


def mode_operator(model: FlatBiGcModel, k: Sequence[int]) -> Matrix:
    """Wedge by ``iκ`` on the spinor space, in the form basis."""
    S = spinor_space(model.n)
    if len(k) != 2 * model.n:
        raise ValueError(f"mode must have {2 * model.n} integer entries, got {len(k)}")
    return _combine([S.wedge_matrix(j) for j in range(2 * model.n)], k, S.dim)


@dataclass(frozen=True)
class ModeComplex:
    """The four components of ``d`` at one mode, as full slice-coordinate matrices."""

    k: tuple[int, ...]
    geometry: FlatGeometry
    d: Matrix
    parts: dict[str, Matrix]

    def __getitem__(self, name: str) -> Matrix:
        return self.parts[name]

    def block(self, name: str, p: int, q: int) -> Matrix:
        dp, dq = COMPONENTS[name]
        return self.geometry.block(self.parts[name], (p, q), (p + dp, q + dq))

    def blocks(self, name: str) -> dict[Key, Matrix]:
        return {key: self.block(name, *key) for key in self.geometry.keys}

    @property
    def partial1(self) -> Matrix:
        return self.parts["delta_plus"] + self.parts["delta_minus"]

    @property
    def partial1_bar(self) -> Matrix:
        return self.parts["delta_bar_plus"] + self.parts["delta_bar_minus"]

    @property
    def partial2(self) -> Matrix:
        return self.parts["delta_plus"] + self.parts["delta_bar_minus"]

    @property
    def partial2_bar(self) -> Matrix:
        return self.parts["delta_bar_plus"] + self.parts["delta_minus"]

    def is_zero(self) -> bool:
        return self.d.is_zero()


def delta_components(model: FlatBiGcModel, k: Sequence[int]) -> ModeComplex:
    g = geometry(model)
    k = _check_mode(g, k)
    parts = {name: _combine(ws, k, g.dim) for name, ws in g.wedge_components.items()}
    return ModeComplex(k, g, _combine(g.wedges, k, g.dim), parts)


def slice_of_bidegree(pair: Pair, n: int, a: int, b: int) -> Key:
    """The ``U^{p,q}`` sitting at bidegree ``(a, b)`` of the reindexed complex."""
    c1 = n % 2
    if pair == "pp":
        return (a + b + c1, a - b)
    if pair == "pb":
        return (a - b + c1, a + b)
    if pair == "bp":
        return (-a + b + c1, -a - b)
    if pair == "bb":
        return (-a - b + c1, -a + b)
    raise ValueError(f"pair must be one of {tuple(PAIRS)}")


def bidegree_of_slice(pair: Pair, n: int, p: int, q: int) -> tuple[int, int]:
    c1 = n % 2
    x = p - c1
    if (x + q) % 2:
        raise AssertionError(f"slice ({p},{q}) has the wrong parity for n={n}")
    if pair == "pp":
        return ((x + q) // 2, (x - q) // 2)
    if pair == "pb":
        return ((x + q) // 2, (q - x) // 2)
    if pair == "bp":
        return ((-x - q) // 2, (x - q) // 2)
    if pair == "bb":
        return ((-x - q) // 2, (q - x) // 2)
    raise ValueError(f"pair must be one of {tuple(PAIRS)}")


def reindex_to_double_complex(mc: ModeComplex, pair: Pair) -> DoubleComplex:
    """Reindex ``U^{p,q}`` so the chosen pair of components become ``(d', d'')``."""
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {tuple(PAIRS)}")
    g = mc.geometry
    first, second = PAIRS[pair]
    support, dp, ds = {}, {}, {}
    for key in g.keys:
        ab = bidegree_of_slice(pair, g.n, *key)
        support[ab] = len(g.ranges[key])
    for key in g.keys:
        a, b = bidegree_of_slice(pair, g.n, *key)
        for name, store, tgt in ((first, dp, (a + 1, b)), (second, ds, (a, b + 1))):
            if tgt not in support:
                continue
            blk = mc.block(name, *key)
            if not blk.is_zero():
                store[(a, b)] = blk
    return DoubleComplex(support, dp, ds)

