"""Dense matrices over the Gaussian rationals and exact row reduction."""
from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = ["Matrix", "DimensionError", "SingularMatrixError", "rref", "rank"]

Vector = tuple  # tuple[GaussianRational, ...]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    """Immutable ``rows x cols`` matrix with :class:`GaussianRational` entries."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows
        self._hash = None

    @classmethod
    def _wrap(cls, rows: Sequence[Sequence[GaussianRational]], cols: int) -> "Matrix":
        m = object.__new__(cls)
        m._data = tuple(tuple(r) for r in rows)
        m.rows = len(m._data)
        m.cols = cols
        m._hash = None
        return m

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._wrap([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = [tuple(as_scalar(x) for x in c) for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls._wrap(list(zip(*columns)), len(columns))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        entries = [as_scalar(x) for x in entries]
        n = len(entries)
        return cls._wrap([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        total_r = sum(b.rows for b in blocks)
        total_c = sum(b.cols for b in blocks)
        out = [[ZERO] * total_c for _ in range(total_r)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b._data):
                out[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls._wrap(out, total_c)

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def row_list(self) -> list[list[GaussianRational]]:
        return [list(r) for r in self._data]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def entries(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    # -- algebra -----------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.cols
            odata = other._data
            out = []
            for row in self._data:
                acc = [ZERO] * ocols
                for k, a in enumerate(row):
                    if not a:
                        continue
                    orow = odata[k]
                    for j in range(ocols):
                        b = orow[j]
                        if b:
                            acc[j] = acc[j] + a * b
                out.append(acc)
            return Matrix._wrap(out, ocols)
        return NotImplemented

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for matrix {self.shape}")
        out = []
        for row in self._data:
            acc = ZERO
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def _zip(self, other: "Matrix", op) -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix._wrap(
            [[op(a, b) for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols
        )

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return Matrix._wrap([[-a for a in r] for r in self._data], self.cols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix._wrap([[c * a for a in r] for r in self._data], self.cols)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    @property
    def T(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.zeros(self.cols, 0)
        return Matrix._wrap(list(zip(*self._data)), self.rows)

    def conj(self) -> "Matrix":
        return Matrix._wrap([[a.conjugate() for a in r] for r in self._data], self.cols)

    @property
    def H(self) -> "Matrix":
        return self.conj().T

    def hstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if len({m.rows for m in mats}) != 1:
            raise DimensionError("hstack needs equal row counts")
        rows = [sum((m._data[i] for m in mats), ()) for i in range(self.rows)]
        return Matrix._wrap(rows, sum(m.cols for m in mats))

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = (self,) + others
        if len({m.cols for m in mats}) != 1:
            raise DimensionError("vstack needs equal column counts")
        return Matrix._wrap([r for m in mats for r in m._data], self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._wrap([[self._data[i][j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_real(self) -> bool:
        return all(a.is_real() for r in self._data for a in r)

    def trace(self) -> GaussianRational:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._data[i][i]
        return acc

    def rank(self) -> int:
        return len(rref(self)[1])

    def det(self) -> GaussianRational:
        if not self.is_square():
            raise DimensionError("determinant needs a square matrix")
        rows = self.row_list()
        n, acc = self.rows, ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if rows[i][c]), None)
            if pr is None:
                return ZERO
            if pr != c:
                rows[c], rows[pr] = rows[pr], rows[c]
                acc = -acc
            piv = rows[c][c]
            acc = acc * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                f = rows[i][c] * inv
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return acc

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionError("only square matrices are invertible")
        n = self.rows
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self._data)]
        pivots = _rref_inplace(aug, n)
        if len(pivots) != n:
            raise SingularMatrixError("matrix is singular")
        return Matrix._wrap([r[n:] for r in aug], n)

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Return one ``X`` with ``self @ X == rhs``; raise if inconsistent."""
        if rhs.rows != self.rows:
            raise DimensionError("rhs row count mismatch")
        n = self.cols
        aug = [list(r) + list(s) for r, s in zip(self._data, rhs._data)]
        pivots = _rref_inplace(aug, n)
        for r in aug[len(pivots):]:
            if any(r[n:]):
                raise SingularMatrixError("linear system is inconsistent")
        out = [[ZERO] * rhs.cols for _ in range(n)]
        for i, pc in enumerate(pivots):
            out[pc] = aug[i][n:]
        return Matrix._wrap(out, rhs.cols)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square() or k < 0:
            raise DimensionError("power needs a square matrix and k >= 0")
        result, base = Matrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # -- comparison / display ----------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def to_literals(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self._data]

    def __repr__(self):
        return f"Matrix({self.to_literals()!r})"


def _rref_inplace(rows: list[list[GaussianRational]], ncols: int | None = None) -> list[int]:
    """Gauss-Jordan elimination on ``rows`` restricted to the first ``ncols`` columns.

    Pivots are scaled to one and cleared above and below. Returns pivot columns.
    """
    if not rows:
        return []
    width = len(rows[0])
    if ncols is None:
        ncols = width
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != ONE:
            inv = piv.inverse()
            prow = [x * inv if x else x for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, width) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            for j in nz:
                row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns of ``m``."""
    rows = m.row_list()
    pivots = _rref_inplace(rows)
    return Matrix._wrap(rows, m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    return m.rank()
