"""Hodge inner product, adjoints, Laplacians and harmonic forms at one Fourier mode.

The literal form ``h(α, β) = (α, ⋆ conj β)_Ch`` is Hermitian and nondegenerate
and makes distinct ``U^{p,q}`` orthogonal, but on a slice it is definite of
sign ``ε`` rather than always positive. ``HodgeForm.positive`` multiplies each
slice by its sign; that positive form is the one used for Laplacians. Both are
independent of the mode (the volume is normalized to 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..exact import Matrix, Subspace, kernel_basis, image_basis, subspace_intersection, subspace_sum
from ..spinor import chevalley_matrix, hodge_star
from ..spinor.hodge import _is_positive_definite
from .model import FlatBiGcModel
from .modes import COMPONENTS, FlatGeometry, ModeComplex, delta_components, geometry

__all__ = [
    "HodgeFormError",
    "HodgeForm",
    "hodge_inner_product",
    "adjoint_of",
    "AdjointCheck",
    "check_adjoint_formulas",
    "DELTA_INDEX",
    "LAPLACIAN_PAIRS",
    "Laplacians",
    "laplacians",
    "kahler_identities",
    "HarmonicResult",
    "harmonic_decomposition",
    "anticommutators",
    "reality_relations",
]

# δ_1 = δ+, δ_2 = δ-, δ_3 = δ̄-, δ_4 = δ̄+
DELTA_INDEX = {1: "delta_plus", 2: "delta_minus", 3: "delta_bar_minus", 4: "delta_bar_plus"}
LAPLACIAN_PAIRS = ((1, 2), (1, 3), (2, 4), (3, 4))


class HodgeFormError(ValueError):
    pass


@dataclass(frozen=True)
class HodgeForm:
    """Gram matrices in slice coordinates: ``h(x, y) = x^T H conj(y)``."""

    geometry: FlatGeometry
    star: Matrix
    raw: Matrix
    signs: dict
    positive: Matrix

    def _coords(self, v: Sequence) -> tuple:
        return self.geometry.Binv.apply(v)

    def _eval(self, H: Matrix, a: Sequence, b: Sequence):
        x, y = self._coords(a), self._coords(b)
        Hy = H.apply(tuple(c.conjugate() for c in y))
        return sum((u * w for u, w in zip(x, Hy)), x[0] * 0)

    def value(self, alpha: Sequence, beta: Sequence):
        """Positive form on two forms given in the form basis."""
        return self._eval(self.positive, alpha, beta)

    def raw_value(self, alpha: Sequence, beta: Sequence):
        return self._eval(self.raw, alpha, beta)


_FORMS: dict = {}


def hodge_inner_product(model: FlatBiGcModel, k: Sequence[int] | None = None) -> HodgeForm:
    """The Hodge form of ``model``; ``k`` is accepted for symmetry and ignored."""
    g = geometry(model)
    if g in _FORMS:
        return _FORMS[g]
    star = hodge_star(model.G)
    raw = g.B.T @ chevalley_matrix(model.n) @ star @ g.B.conj()
    if raw.T != raw.conj():
        raise HodgeFormError("Hodge form is not Hermitian")
    for r in range(g.dim):
        for c in range(g.dim):
            if raw[r, c] and g.slice_of[r] != g.slice_of[c]:
                raise HodgeFormError(f"slices {g.slice_of[c]} and {g.slice_of[r]} are not orthogonal")
    signs = {}
    for key in g.keys:
        blk = g.block(raw, key, key)
        if _is_positive_definite(blk):
            signs[key] = 1
        elif _is_positive_definite(-blk):
            signs[key] = -1
        else:
            raise HodgeFormError(f"Hodge form is indefinite on U^{key}")
    positive = Matrix.diagonal([signs[s] for s in g.slice_of]) @ raw
    form = HodgeForm(g, star, raw, signs, positive)
    _FORMS[g] = form
    return form


def adjoint_of(op: Matrix, H: Matrix) -> Matrix:
    """``B`` with ``h(op x, y) = h(x, B y)`` for ``h(x, y) = x^T H conj(y)``."""
    Hc = H.conj()
    return Hc.inverse() @ op.H @ Hc


def _adjoint(form: HodgeForm, op: Matrix) -> Matrix:
    return adjoint_of(op, form.positive)


@dataclass(frozen=True)
class AdjointCheck:
    """Which closed formula reproduces the adjoint of each component at mode ``k``.

    ``inverse_star`` is ``-⋆̄^{-1} δ ⋆̄`` and ``star_star`` is ``-⋆̄ δ ⋆̄``, each
    compared with the adjoint for the literal form. ``positive_sign`` is ``s``
    with adjoint-for-the-positive-form ``= s * inverse_star`` (``0`` if neither sign).
    """

    k: tuple[int, ...]
    inverse_star: dict
    star_star: dict
    forms_coincide: dict
    positive_sign: dict

    @property
    def validated(self) -> str | None:
        """The single formula that matches for every component, if there is one."""
        s = all(self.inverse_star.values())
        p = all(self.star_star.values())
        if s and not p:
            return "inverse_star"
        if p and not s:
            return "star_star"
        return None

    def to_json(self) -> dict:
        return {
            "k": list(self.k),
            "inverse_star": self.inverse_star,
            "star_star": self.star_star,
            "forms_coincide": self.forms_coincide,
            "positive_sign": self.positive_sign,
            "validated": self.validated,
        }


def check_adjoint_formulas(model: FlatBiGcModel, k: Sequence[int]) -> AdjointCheck:
    """Compare both closed adjoint formulas with the exact adjoint at mode ``k``.

    ``⋆̄`` pairs the character ``e^{ik·x}`` with ``e^{-ik·x}``, so the formulas
    involve the component at mode ``-k``.
    """
    form = hodge_inner_product(model)
    g = form.geometry
    mc = delta_components(model, k)
    mneg = delta_components(model, tuple(-x for x in mc.k))
    star, star_inv = form.star, form.star.inverse()
    out = {"inverse_star": {}, "star_star": {}, "forms_coincide": {}, "positive_sign": {}}
    for name in COMPONENTS:
        opposite = g.to_spinor(mneg[name]).conj()
        stmt = g.from_spinor(-(star_inv @ opposite @ star))
        proof = g.from_spinor(-(star @ opposite @ star))
        exact = adjoint_of(mc[name], form.raw)
        pos = adjoint_of(mc[name], form.positive)
        out["inverse_star"][name] = exact == stmt
        out["star_star"][name] = exact == proof
        out["forms_coincide"][name] = stmt == proof
        out["positive_sign"][name] = 1 if pos == stmt else (-1 if pos == -stmt else 0)
    return AdjointCheck(mc.k, **out)


@dataclass(frozen=True)
class Laplacians:
    k: tuple[int, ...]
    delta: dict
    partial1: Matrix
    partial2: Matrix
    d: Matrix
    pairs: dict


def _box(form: HodgeForm, op: Matrix) -> Matrix:
    a = _adjoint(form, op)
    return op @ a + a @ op


def laplacians(model: FlatBiGcModel, k: Sequence[int], mc: ModeComplex | None = None) -> Laplacians:
    """``Δ_δ = δδ* + δ*δ`` for each component, ``Δ_{∂1}``, ``Δ_{∂2}``, ``Δ_d`` and the six-term ``Δ_{i,j}``."""
    form = hodge_inner_product(model)
    mc = mc or delta_components(model, k)
    delta = {name: _box(form, mc[name]) for name in COMPONENTS}
    ds = {i: mc[DELTA_INDEX[i]] for i in DELTA_INDEX}
    adj = {i: _adjoint(form, m) for i, m in ds.items()}
    pairs = {}
    for i, j in LAPLACIAN_PAIRS:
        di, dj, ai, aj = ds[i], ds[j], adj[i], adj[j]
        pairs[(i, j)] = (
            di @ dj @ aj @ ai
            + aj @ ai @ di @ dj
            + aj @ di @ ai @ dj
            + ai @ dj @ aj @ di
            + ai @ di
            + aj @ dj
        )
    return Laplacians(mc.k, delta, _box(form, mc.partial1), _box(form, mc.partial2), _box(form, mc.d), pairs)


def kahler_identities(model: FlatBiGcModel, k: Sequence[int]) -> dict[str, bool]:
    """``δ_i*δ_j = -δ_jδ_i*`` and ``δ_iδ_j* = -δ_j*δ_i`` for ``i < j``; ``δ_i*δ_j* = -δ_j*δ_i*`` on the four pairs."""
    form = hodge_inner_product(model)
    mc = delta_components(model, k)
    ds = {i: mc[DELTA_INDEX[i]] for i in DELTA_INDEX}
    adj = {i: _adjoint(form, m) for i, m in ds.items()}
    out = {}
    for i in range(1, 5):
        for j in range(i + 1, 5):
            out[f"d{i}* d{j} = -d{j} d{i}*"] = adj[i] @ ds[j] == -(ds[j] @ adj[i])
            out[f"d{i} d{j}* = -d{j}* d{i}"] = ds[i] @ adj[j] == -(adj[j] @ ds[i])
    for i, j in LAPLACIAN_PAIRS:
        out[f"d{i}* d{j}* = -d{j}* d{i}*"] = adj[i] @ adj[j] == -(adj[j] @ adj[i])
    return out


@dataclass(frozen=True)
class HarmonicResult:
    harmonic_dim: int
    image_dim: int
    kernel_dim: int
    verdict: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _slice_space(g: FlatGeometry, key) -> Subspace:
    return Subspace(g.dim, g.slice_columns(key))


def harmonic_decomposition(
    model: FlatBiGcModel, k: Sequence[int], ij: tuple[int, int], pq: tuple[int, int], lap: Laplacians | None = None
) -> HarmonicResult:
    """Check ``ker δ_i ∩ ker δ_j = ker Δ_{i,j} ⊕ (im δ_iδ_j ∩ U^{p,q})`` on one slice."""
    if tuple(ij) not in LAPLACIAN_PAIRS:
        raise ValueError(f"(i, j) must be one of {LAPLACIAN_PAIRS}")
    g = geometry(model)
    mc = delta_components(model, k)
    lap = lap or laplacians(model, k, mc)
    i, j = ij
    U = _slice_space(g, tuple(pq))
    if not U.dim:
        return HarmonicResult(0, 0, 0, True)
    di, dj = mc[DELTA_INDEX[i]], mc[DELTA_INDEX[j]]
    closed = subspace_intersection(U, kernel_basis(di.vstack(dj)))
    harmonic = subspace_intersection(U, kernel_basis(lap.pairs[(i, j)]))
    image = subspace_intersection(U, image_basis(di @ dj))
    direct = subspace_intersection(harmonic, image).dim == 0
    verdict = direct and subspace_sum(harmonic, image) == closed
    return HarmonicResult(harmonic.dim, image.dim, closed.dim, verdict)


def anticommutators(model: FlatBiGcModel, k: Sequence[int]) -> dict[str, bool]:
    """Vanishing of the component relations forced by ``d^2 = 0`` and ``∂_i^2 = 0``."""
    mc = delta_components(model, k)
    dp, dm = mc["delta_plus"], mc["delta_minus"]
    bp, bm = mc["delta_bar_plus"], mc["delta_bar_minus"]

    def anti(a, b):
        return (a @ b + b @ a).is_zero()

    return {
        "d+ d- + d- d+": anti(dp, dm),
        "d+ db- + db- d+": anti(dp, bm),
        "db+ db- + db- db+": anti(bp, bm),
        "db+ d- + d- db+": anti(bp, dm),
        "d+^2": (dp @ dp).is_zero(),
        "d-^2": (dm @ dm).is_zero(),
        "db+^2": (bp @ bp).is_zero(),
        "db-^2": (bm @ bm).is_zero(),
        "d+ db+ + db+ d+ + d- db- + db- d-": (dp @ bp + bp @ dp + dm @ bm + bm @ dm).is_zero(),
        "component sum = d": dp + dm + bp + bm == mc.d,
    }


def reality_relations(model: FlatBiGcModel, k: Sequence[int]) -> dict[str, bool]:
    """``conj(δ α) = δ' (conj α)`` with ``δ'`` the conjugate component; conjugation sends mode ``k`` to ``-k``."""
    g = geometry(model)
    mc = delta_components(model, k)
    mneg = delta_components(model, tuple(-x for x in mc.k))
    partner = {
        "delta_plus": "delta_bar_plus",
        "delta_minus": "delta_bar_minus",
        "delta_bar_plus": "delta_plus",
        "delta_bar_minus": "delta_minus",
    }
    return {
        f"conj {a} = {b} conj": g.to_spinor(mc[a]).conj() == g.to_spinor(mneg[b])
        for a, b in partner.items()
    }
