"""Constant bi-generalized Hermitian structures ``(J1, J2, G)`` on ``R^{2n}`` and its tori."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from ..exact import Matrix, ScalarParseError, kernel_basis
from ..exact.matrix import DimensionError
from ..spinor.clifford import pairing_matrix
from ..spinor.hodge import _is_positive_definite

__all__ = [
    "ModelParseError",
    "ModelValidationError",
    "ModelViolation",
    "FlatBiGcModel",
    "validate_model",
    "t2_structures",
    "t2_model",
    "t4_model",
    "MetricSearch",
    "metric_search",
]


class ModelParseError(ValueError):
    pass


class ModelValidationError(ValueError):
    def __init__(self, violations: list["ModelViolation"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class ModelViolation:
    identity: str
    entry: tuple[int, int] | None = None

    def __str__(self):
        return self.identity + (f" (first mismatch at entry {self.entry})" if self.entry else "")


@dataclass(frozen=True)
class FlatBiGcModel:
    n: int
    J1: Matrix
    J2: Matrix
    G: Matrix
    label: str = ""
    metadata: dict = field(default_factory=dict, compare=False)

    def require_valid(self) -> "FlatBiGcModel":
        bad = validate_model(self)
        if bad:
            raise ModelValidationError(bad)
        return self

    def is_generalized_kahler(self) -> bool:
        return self.G == -(self.J1 @ self.J2)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "J1": self.J1.to_literals(),
            "J2": self.J2.to_literals(),
            "G": self.G.to_literals(),
        }

    @classmethod
    def from_json(cls, doc) -> "FlatBiGcModel":
        if isinstance(doc, (str, bytes)):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise ModelParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ModelParseError("model document must be a JSON object")
        try:
            n = doc["n"]
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise ModelParseError("'n' must be a positive integer")
            J1, J2 = _matrix(doc["J1"], n, "J1"), _matrix(doc["J2"], n, "J2")
            g = doc["G"]
            if g == "auto:-J1J2":
                G = -(J1 @ J2)
            elif isinstance(g, str):
                raise ModelParseError(f"unknown metric shorthand {g!r}")
            else:
                G = _matrix(g, n, "G")
        except KeyError as exc:
            raise ModelParseError(f"model document is missing {exc}") from exc
        label = doc.get("label", "")
        if not isinstance(label, str):
            raise ModelParseError("'label' must be a string")
        return cls(n, J1, J2, G, label)


def _matrix(rows, n: int, name: str) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ModelParseError(f"{name} must be a list of rows")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise ModelParseError(f"{name} entries must be integers or rational literals, got {x!r}")
    try:
        m = Matrix([[str(x) for x in r] for r in rows])
    except (ScalarParseError, DimensionError) as exc:
        raise ModelParseError(f"{name}: {exc}") from exc
    if m.shape != (4 * n, 4 * n):
        raise ModelParseError(f"{name} must be {4 * n}x{4 * n}, got {m.rows}x{m.cols}")
    return m


def _first_mismatch(a: Matrix, b: Matrix) -> tuple[int, int] | None:
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] != b[i, j]:
                return (i, j)
    return None


def validate_model(m: FlatBiGcModel) -> list[ModelViolation]:
    """Every failed defining identity of the model, with its first bad entry.

    Constant structures on flat space are integrable, so only pointwise
    identities are checked.
    """
    out: list[ModelViolation] = []
    P = pairing_matrix(m.n)
    eye = Matrix.identity(4 * m.n)

    def check(name: str, lhs: Matrix, rhs: Matrix):
        if lhs != rhs:
            out.append(ModelViolation(name, _first_mismatch(lhs, rhs)))

    for name, M in (("J1", m.J1), ("J2", m.J2), ("G", m.G)):
        if not M.is_real():
            out.append(ModelViolation(f"{name} has non-real entries"))
    check("J1^2 = -I", m.J1 @ m.J1, -eye)
    check("J2^2 = -I", m.J2 @ m.J2, -eye)
    check("J1^T P J1 = P", m.J1.T @ P @ m.J1, P)
    check("J2^T P J2 = P", m.J2.T @ P @ m.J2, P)
    check("J1 J2 = J2 J1", m.J1 @ m.J2, m.J2 @ m.J1)
    check("G^T P G = P", m.G.T @ P @ m.G, P)
    check("G^T P = P G", m.G.T @ P, P @ m.G)
    check("G J1 = J1 G", m.G @ m.J1, m.J1 @ m.G)
    check("G J2 = J2 G", m.G @ m.J2, m.J2 @ m.G)
    PG = P @ m.G
    if PG == PG.T and PG.is_real() and not _is_positive_definite(PG):
        out.append(ModelViolation("<Ge, e> > 0"))
    return out


def t2_structures(a, b, c, p, q, r) -> tuple[Matrix, Matrix]:
    """The two constant structures on ``R^2`` parametrized by ``a^2 + bc = -1`` and ``p^2 + qr = -1``."""
    J1 = Matrix([[a, 0, 0, b], [0, a, -b, 0], [0, -c, -a, 0], [c, 0, 0, -a]])
    J2 = Matrix([[p, q, 0, 0], [r, -p, 0, 0], [0, 0, -p, -r], [0, 0, -q, p]])
    return J1, J2


def t2_model(a=0, b=1, c=-1, p=0, q=1, r=-1, G: Matrix | None = None) -> FlatBiGcModel:
    J1, J2 = t2_structures(a, b, c, p, q, r)
    return FlatBiGcModel(1, J1, J2, -(J1 @ J2) if G is None else G, f"T2 a={a} b={b} c={c} p={p} q={q} r={r}")


_T4_J1 = [
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
]
_T4_J2 = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, -1, 0],
]


def t4_model() -> FlatBiGcModel:
    """Symplectic ``dx1∧dx2 + dy1∧dy2`` type ``J1``, complex ``J2`` of ``C^2`` and the swap metric."""
    G = Matrix([[1 if j == (i + 4) % 8 else 0 for j in range(8)] for i in range(8)])
    return FlatBiGcModel(2, Matrix(_T4_J1), Matrix(_T4_J2), G, "T4 symplectic x complex")


@dataclass(frozen=True)
class MetricSearch:
    """Evidence about compatible metrics for a commuting pair.

    ``commutant_dim`` is the dimension of pairing-self-adjoint matrices commuting
    with both structures; ``positive_hits`` counts sampled elements ``X`` of that
    space with ``P X`` positive definite (a metric exists only if one does), and
    ``metric`` is an exact metric found among the candidates, if any.
    """

    commutant_dim: int
    samples: int
    positive_hits: int
    metric: Matrix | None

    @property
    def evidence_of_metric(self) -> bool:
        return self.metric is not None or self.positive_hits > 0


def metric_search(J1: Matrix, J2: Matrix, samples: int = 200, seed: int = 0) -> MetricSearch:
    """Probe the linear system ``X J_i = J_i X``, ``X^T P = P X`` at rational sample points."""
    size = J1.rows
    n = size // 4
    P = pairing_matrix(n)
    eqs = []
    # unknowns are the entries of X in row-major order
    for i in range(size):
        for j in range(size):
            for J in (J1, J2):
                row = [0] * (size * size)
                for k in range(size):
                    row[i * size + k] += J[k, j]
                    row[k * size + j] -= J[i, k]
                eqs.append(row)
            row = [0] * (size * size)
            for k in range(size):
                row[k * size + i] += P[k, j]
                row[j * size + k] -= P[i, k]
            eqs.append(row)
    space = kernel_basis(Matrix(eqs)).vectors()
    basis = [Matrix([v[i * size:(i + 1) * size] for i in range(size)]) for v in space]
    eye = Matrix.identity(size)

    def is_metric(X: Matrix) -> bool:
        return X @ X == eye and _is_positive_definite(P @ X)

    metric = None
    for cand in [-(J1 @ J2), J1 @ J2, *basis]:
        if cand.is_real() and all(cand @ J == J @ cand for J in (J1, J2)) and cand.T @ P == P @ cand and is_metric(cand):
            metric = cand
            break
    rng = random.Random(seed)
    hits = 0
    for _ in range(samples if basis else 0):
        X = Matrix.zeros(size, size)
        for B in basis:
            X = X + B.scale(rng.randint(-3, 3))
        if X.is_real() and _is_positive_definite(P @ X):
            hits += 1
            if metric is None and is_metric(X):
                metric = X
    return MetricSearch(len(basis), samples if basis else 0, hits, metric)
