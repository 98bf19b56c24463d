"""Finitely supported double complexes ``(A, d', d'')`` with bidegrees (1,0) and (0,1)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ..exact import ZERO, Matrix, ScalarParseError
from ..exact.matrix import DimensionError

__all__ = ["DoubleComplex", "Violation", "ComplexParseError", "ComplexValidationError"]

Bidegree = tuple[int, int]


class ComplexParseError(ValueError):
    """Input document is not a well-formed complex description."""


class ComplexValidationError(ValueError):
    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class Violation:
    kind: str
    p: int
    q: int
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at ({self.p},{self.q})" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class DoubleComplex:
    """Bigraded space with ``d'`` of bidegree (1,0) and ``d''`` of bidegree (0,1).

    ``support`` maps bidegrees to dimensions (zero-dimensional entries are
    dropped). ``dprime[(p, q)]`` is the matrix of ``A^{p,q} -> A^{p+1,q}`` and
    ``dsecond[(p, q)]`` of ``A^{p,q} -> A^{p,q+1}``; missing maps are zero.
    Treat instances as immutable.
    """

    support: Mapping[Bidegree, int]
    dprime: Mapping[Bidegree, Matrix] = field(default_factory=dict)
    dsecond: Mapping[Bidegree, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        support = {tuple(k): int(v) for k, v in self.support.items() if int(v) > 0}
        object.__setattr__(self, "support", dict(sorted(support.items())))
        for name in ("dprime", "dsecond"):
            maps = {tuple(k): v for k, v in getattr(self, name).items() if v.rows and v.cols}
            object.__setattr__(self, name, dict(sorted(maps.items())))

    # -- shape -------------------------------------------------------------
    def dim(self, p: int, q: int) -> int:
        return self.support.get((p, q), 0)

    def d1(self, p: int, q: int) -> Matrix:
        m = self.dprime.get((p, q))
        return m if m is not None else Matrix.zeros(self.dim(p + 1, q), self.dim(p, q))

    def d2(self, p: int, q: int) -> Matrix:
        m = self.dsecond.get((p, q))
        return m if m is not None else Matrix.zeros(self.dim(p, q + 1), self.dim(p, q))

    def hull(self) -> tuple[range, range]:
        """Bounding box of the support as ``(p_range, q_range)``."""
        if not self.support:
            return range(0, 0), range(0, 0)
        ps = [p for p, _ in self.support]
        qs = [q for _, q in self.support]
        return range(min(ps), max(ps) + 1), range(min(qs), max(qs) + 1)

    def hull_points(self, pad: int = 0) -> Iterator[Bidegree]:
        prange, qrange = self.hull()
        if not len(prange):
            return iter(())
        return (
            (p, q)
            for p in range(prange.start - pad, prange.stop + pad)
            for q in range(qrange.start - pad, qrange.stop + pad)
        )

    def total_degrees(self) -> range:
        if not self.support:
            return range(0, 0)
        ks = [p + q for p, q in self.support]
        return range(min(ks), max(ks) + 1)

    def total_layout(self, k: int) -> list[tuple[Bidegree, int, int]]:
        """Blocks of ``A^k`` as ``((p, q), offset, dim)`` in increasing ``p``."""
        blocks, off = [], 0
        for (p, q), d in self.support.items():
            if p + q == k:
                blocks.append(((p, q), off, d))
                off += d
        return blocks

    def total_dim(self, k: int) -> int:
        return sum(d for (p, q), d in self.support.items() if p + q == k)

    def total_differential(self, k: int) -> Matrix:
        """Matrix of ``d = d' + d''`` from ``A^k`` to ``A^{k+1}``."""
        src = self.total_layout(k)
        tgt = {pq: (off, d) for pq, off, d in self.total_layout(k + 1)}
        rows = [[ZERO] * self.total_dim(k) for _ in range(self.total_dim(k + 1))]
        for (p, q), soff, sd in src:
            for (tp, tq), m in (((p + 1, q), self.dprime.get((p, q))), ((p, q + 1), self.dsecond.get((p, q)))):
                if m is None or (tp, tq) not in tgt:
                    continue
                toff, _ = tgt[(tp, tq)]
                for i in range(m.rows):
                    for j in range(m.cols):
                        rows[toff + i][soff + j] = rows[toff + i][soff + j] + m[i, j]
        return Matrix._wrap(rows, self.total_dim(k))

    # -- checks ------------------------------------------------------------
    def validate(self) -> list[Violation]:
        """Every broken shape, square or anticommutation, as data."""
        out: list[Violation] = []
        for name, maps, step in (("dprime", self.dprime, (1, 0)), ("dsecond", self.dsecond, (0, 1))):
            for (p, q), m in maps.items():
                want = (self.dim(p + step[0], q + step[1]), self.dim(p, q))
                if m.shape != want:
                    out.append(Violation("shape", p, q, f"{name} is {m.shape}, expected {want}"))
        if out:
            return out
        for (p, q) in self.support:
            if not (self.d1(p + 1, q) @ self.d1(p, q)).is_zero():
                out.append(Violation("dprime-square", p, q, "d'd' != 0"))
            if not (self.d2(p, q + 1) @ self.d2(p, q)).is_zero():
                out.append(Violation("dsecond-square", p, q, "d''d'' != 0"))
            anti = self.d1(p, q + 1) @ self.d2(p, q) + self.d2(p + 1, q) @ self.d1(p, q)
            if not anti.is_zero():
                out.append(Violation("anticommutation", p, q, "d'd'' + d''d' != 0"))
        return out

    def is_valid(self) -> bool:
        return not self.validate()

    def require_valid(self) -> "DoubleComplex":
        bad = self.validate()
        if bad:
            raise ComplexValidationError(bad)
        return self

    # -- serialization -----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "spaces": [{"p": p, "q": q, "dim": d} for (p, q), d in self.support.items()],
            "dprime": [{"p": p, "q": q, "matrix": m.to_literals()} for (p, q), m in self.dprime.items()],
            "dsecond": [{"p": p, "q": q, "matrix": m.to_literals()} for (p, q), m in self.dsecond.items()],
        }

    @classmethod
    def from_json(cls, doc) -> "DoubleComplex":
        if isinstance(doc, (str, bytes)):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise ComplexParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "spaces" not in doc:
            raise ComplexParseError("complex document needs a 'spaces' list")
        try:
            support = {}
            for s in doc["spaces"]:
                key = (_int(s["p"]), _int(s["q"]))
                if key in support:
                    raise ComplexParseError(f"duplicate space at {key}")
                dim = _int(s["dim"])
                if dim < 0:
                    raise ComplexParseError(f"negative dimension at {key}")
                support[key] = dim
            maps = {}
            for name in ("dprime", "dsecond"):
                maps[name] = {}
                for entry in doc.get(name, []):
                    key = (_int(entry["p"]), _int(entry["q"]))
                    rows = entry["matrix"]
                    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                        raise ComplexParseError(f"{name} matrix at {key} must be a list of rows")
                    if any(not isinstance(x, str) for r in rows for x in r):
                        raise ComplexParseError(f"{name} entries at {key} must be scalar literal strings")
                    maps[name][key] = Matrix(rows) if rows else Matrix.zeros(0, 0)
        except (KeyError, TypeError) as exc:
            raise ComplexParseError(f"malformed complex document: {exc!r}") from exc
        except (ScalarParseError, DimensionError) as exc:
            raise ComplexParseError(str(exc)) from exc
        return cls(support, maps["dprime"], maps["dsecond"])


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ComplexParseError(f"expected an integer, got {x!r}")
    return x
