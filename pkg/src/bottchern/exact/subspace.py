"""Subspaces of ``Q(i)^n`` in canonical form and the lattice operations on them."""
from __future__ import annotations

from typing import Iterable, Sequence

from .matrix import DimensionError, Matrix, _rref_inplace
from .scalar import ZERO, GaussianRational, as_scalar

__all__ = [
    "Subspace",
    "ContainmentError",
    "kernel_basis",
    "image_basis",
    "subspace_sum",
    "subspace_intersection",
    "quotient_dim",
    "complement",
    "intersect_all",
    "sum_all",
]


class ContainmentError(ValueError):
    pass


class Subspace:
    """A linear subspace stored by its reduced column echelon basis.

    Two subspaces are equal exactly when their stored bases are equal, so
    ``==`` and ``hash`` are structural.
    """

    __slots__ = ("ambient_dim", "_rows", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [[as_scalar(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionError(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        self._set(rows)

    def _set(self, rows):
        pivots = _rref_inplace(rows, self.ambient_dim) if rows else []
        self._rows = tuple(tuple(r) for r in rows[: len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def _from_rows(cls, ambient_dim: int, rows: list[list[GaussianRational]]) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = ambient_dim
        s._set(rows)
        return s

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim).row_list())

    @classmethod
    def span_columns(cls, m: Matrix) -> "Subspace":
        return cls._from_rows(m.rows, [list(c) for c in m.columns()])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        if not self._rows:
            return Matrix.zeros(self.ambient_dim, 0)
        return Matrix._wrap(list(zip(*self._rows)), len(self._rows))

    def vectors(self) -> list[tuple]:
        return list(self._rows)

    def contains(self, v: Sequence) -> bool:
        v = [as_scalar(x) for x in v]
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        # reduce against the echelon basis using pivot positions
        for row, pc in zip(self._rows, self.pivots):
            f = v[pc]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return not any(v)

    def issubspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(v) for v in self._rows)

    def conjugate(self) -> "Subspace":
        return Subspace._from_rows(self.ambient_dim, [[a.conjugate() for a in r] for r in self._rows])

    def image_under(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise DimensionError("map domain does not match ambient dimension")
        return Subspace._from_rows(m.rows, [list(m.apply(v)) for v in self._rows])

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of ``v`` in the stored basis; raises if ``v`` is outside."""
        v = [as_scalar(x) for x in v]
        if not self.contains(v):
            raise ContainmentError("vector is not in the subspace")
        return tuple(v[pc] for pc in self.pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"

    def to_literals(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self._rows]


def _check_ambient(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")


def kernel_basis(m: Matrix) -> Subspace:
    """``{v : m v = 0}``."""
    rows = m.row_list()
    pivots = _rref_inplace(rows, m.cols) if rows else []
    pivset = set(pivots)
    vecs = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = GaussianRational._raw(1, 0, 1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        vecs.append(v)
    return Subspace._from_rows(m.cols, vecs)


def image_basis(m: Matrix) -> Subspace:
    """Column span of ``m``."""
    return Subspace.span_columns(m)


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_ambient(u, w)
    if not w.dim:
        return u
    if not u.dim:
        return w
    return Subspace._from_rows(u.ambient_dim, [list(r) for r in u._rows] + [list(r) for r in w._rows])


def subspace_intersection(u: Subspace, w: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked system ``[B_u | -B_w]``."""
    _check_ambient(u, w)
    if not u.dim or not w.dim:
        return Subspace.zero(u.ambient_dim)
    bu, bw = u.basis, w.basis
    ker = kernel_basis(bu.hstack(-bw))
    k = u.dim
    return Subspace._from_rows(u.ambient_dim, [list(bu.apply(v[:k])) for v in ker.vectors()])


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    out = spaces[0]
    for s in spaces[1:]:
        out = subspace_intersection(out, s)
    return out


def sum_all(spaces: Sequence[Subspace]) -> Subspace:
    out = spaces[0]
    for s in spaces[1:]:
        out = subspace_sum(out, s)
    return out


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """``dim big - dim small`` after checking ``small`` lies in ``big``."""
    if not small.issubspace(big):
        raise ContainmentError("quotient requires small to be contained in big")
    return big.dim - small.dim


def complement(big: Subspace, small: Subspace) -> Matrix:
    """Columns spanning a complement of ``small`` inside ``big``.

    Deterministic: the canonical basis vectors of ``big`` are scanned in order
    and kept when independent of everything kept so far.
    """
    if not small.issubspace(big):
        raise ContainmentError("complement requires small to be contained in big")
    current = small
    chosen = []
    for v in big.vectors():
        if current.contains(v):
            continue
        chosen.append(v)
        current = subspace_sum(current, Subspace._from_rows(big.ambient_dim, [list(v)]))
    if not chosen:
        return Matrix.zeros(big.ambient_dim, 0)
    return Matrix.from_columns(chosen)
