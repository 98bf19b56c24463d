"""Cohomology theories of a double complex and the lattice of subspaces behind them.

Every quantity is a dimension of a quotient of subspaces of a single
bidegree ``A^{p,q}`` (or of a total degree ``A^k``), computed exactly.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Iterable

from ..exact import (
    Matrix,
    Subspace,
    complement,
    image_basis,
    kernel_basis,
    quotient_dim,
    subspace_intersection,
    subspace_sum,
)
from .complex import Bidegree, DoubleComplex

__all__ = [
    "THEORIES",
    "CohomologyReport",
    "LatticeInvariants",
    "BidegreeLattice",
    "MapInfo",
    "TheoremRecord",
    "lattice",
    "de_rham",
    "row_column_cohomology",
    "bott_chern",
    "aeppli",
    "lattice_invariants",
    "ddbar_lemma_at",
    "ddbar_lemma_in_degree",
    "natural_maps",
    "check_theorem_equivalences",
    "cohomology_tables",
]

THEORIES = ("bc", "aeppli", "dprime", "dsecond", "derham")


@dataclass
class CohomologyReport:
    """Dimensions (and optionally representative bases) of one theory.

    Keys are bidegrees ``(p, q)`` for ``bc``, ``aeppli``, ``dprime`` and
    ``dsecond`` and total degrees ``k`` for ``derham``. Representatives are
    matrices whose columns lift a basis of the quotient.
    """

    theory: str
    dims: dict
    representatives: dict | None = None

    def total(self) -> int:
        return sum(self.dims.values())

    def by_total_degree(self) -> dict[int, int]:
        if self.theory == "derham":
            return dict(self.dims)
        out: dict[int, int] = {}
        for (p, q), d in self.dims.items():
            out[p + q] = out.get(p + q, 0) + d
        return dict(sorted(out.items()))

    def to_json(self, with_representatives: bool = False) -> dict:
        if self.theory == "derham":
            dims = [{"k": k, "dim": d} for k, d in sorted(self.dims.items())]
        else:
            dims = [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(self.dims.items())]
        doc = {"theory": self.theory, "dims": dims}
        if with_representatives and self.representatives is not None:
            doc["representatives"] = [
                {"key": list(k) if isinstance(k, tuple) else k, "columns": m.T.to_literals()}
                for k, m in sorted(self.representatives.items())
                if m.cols
            ]
        return doc


class BidegreeLattice:
    """The subspaces of ``A^{p,q}`` cut out by kernels and images of ``d'``, ``d''``."""

    def __init__(self, c: DoubleComplex, p: int, q: int):
        self.c, self.p, self.q = c, p, q
        self.dim = c.dim(p, q)

    def _span(self, m: Matrix) -> Subspace:
        return image_basis(m) if m.cols else Subspace.zero(self.dim)

    # the basic six
    @cached_property
    def ker1(self) -> Subspace:
        return kernel_basis(self.c.d1(self.p, self.q))

    @cached_property
    def ker2(self) -> Subspace:
        return kernel_basis(self.c.d2(self.p, self.q))

    @cached_property
    def im1(self) -> Subspace:
        return self._span(self.c.d1(self.p - 1, self.q))

    @cached_property
    def im2(self) -> Subspace:
        return self._span(self.c.d2(self.p, self.q - 1))

    @cached_property
    def im12(self) -> Subspace:
        p, q = self.p, self.q
        return self._span(self.c.d1(p - 1, q) @ self.c.d2(p - 1, q - 1))

    @cached_property
    def ker12(self) -> Subspace:
        p, q = self.p, self.q
        return kernel_basis(self.c.d1(p, q + 1) @ self.c.d2(p, q))

    # derived pieces
    @cached_property
    def ker_both(self) -> Subspace:
        return subspace_intersection(self.ker1, self.ker2)

    @cached_property
    def im_sum(self) -> Subspace:
        return subspace_sum(self.im1, self.im2)

    @cached_property
    def im1_ker2(self) -> Subspace:
        return subspace_intersection(self.im1, self.ker2)

    @cached_property
    def ker1_im2(self) -> Subspace:
        return subspace_intersection(self.ker1, self.im2)

    @cached_property
    def im1_im2(self) -> Subspace:
        return subspace_intersection(self.im1, self.im2)

    @cached_property
    def ker_both_im_sum(self) -> Subspace:
        return subspace_intersection(self.ker_both, self.im_sum)

    @cached_property
    def ker_sum(self) -> Subspace:
        return subspace_sum(self.ker1, self.ker2)

    @cached_property
    def ker1_plus_im2(self) -> Subspace:
        return subspace_sum(self.ker1, self.im2)

    @cached_property
    def im1_plus_ker2(self) -> Subspace:
        return subspace_sum(self.im1, self.ker2)

    @cached_property
    def im_sum_plus_ker_both(self) -> Subspace:
        return subspace_sum(self.im_sum, self.ker_both)

    # cohomology dimensions
    @property
    def h_bc(self) -> int:
        return quotient_dim(self.ker_both, self.im12)

    @property
    def h_a(self) -> int:
        return quotient_dim(self.ker12, self.im_sum)

    @property
    def h_dprime(self) -> int:
        return quotient_dim(self.ker1, self.im1)

    @property
    def h_dsecond(self) -> int:
        return quotient_dim(self.ker2, self.im2)

    def lemma_holds(self) -> bool:
        return self.im1_ker2 == self.ker1_im2 == self.im12


def lattice(c: DoubleComplex) -> dict[Bidegree, BidegreeLattice]:
    """Lazily evaluated lattices for every point of the support hull."""
    return {pq: BidegreeLattice(c, *pq) for pq in c.hull_points()}


class _Cache:
    """Per-complex memo so several reports share one set of subspace computations."""

    def __init__(self, c: DoubleComplex):
        self.c = c
        self._lat: dict[Bidegree, BidegreeLattice] = {}

    def at(self, p: int, q: int) -> BidegreeLattice:
        key = (p, q)
        if key not in self._lat:
            self._lat[key] = BidegreeLattice(self.c, p, q)
        return self._lat[key]


def _cache(c) -> _Cache:
    return c if isinstance(c, _Cache) else _Cache(c)


def _bidegree_report(c, theory: str, big: str, small: str, with_reps: bool) -> CohomologyReport:
    cache = _cache(c)
    dims, reps = {}, {} if with_reps else None
    for p, q in cache.c.hull_points():
        lat = cache.at(p, q)
        if not lat.dim:
            dims[(p, q)] = 0
            continue
        b, s = getattr(lat, big), getattr(lat, small)
        dims[(p, q)] = quotient_dim(b, s)
        if with_reps:
            reps[(p, q)] = complement(b, s)
    return CohomologyReport(theory, dims, reps)


def bott_chern(c, with_representatives: bool = True) -> CohomologyReport:
    """``ker d' ∩ ker d'' / im d'd''`` at every bidegree of the hull."""
    return _bidegree_report(c, "bc", "ker_both", "im12", with_representatives)


def aeppli(c, with_representatives: bool = True) -> CohomologyReport:
    """``ker d'd'' / (im d' + im d'')`` at every bidegree of the hull."""
    return _bidegree_report(c, "aeppli", "ker12", "im_sum", with_representatives)


def row_column_cohomology(c, with_representatives: bool = True) -> tuple[CohomologyReport, CohomologyReport]:
    return (
        _bidegree_report(c, "dprime", "ker1", "im1", with_representatives),
        _bidegree_report(c, "dsecond", "ker2", "im2", with_representatives),
    )


def _total_kernel_image(c: DoubleComplex, k: int) -> tuple[Subspace, Subspace]:
    n = c.total_dim(k)
    ker = kernel_basis(c.total_differential(k)) if n else Subspace.zero(0)
    prev = c.total_differential(k - 1)
    im = image_basis(prev) if prev.cols and n else Subspace.zero(n)
    return ker, im


def de_rham(c, with_representatives: bool = True) -> CohomologyReport:
    """Cohomology of the total complex ``A^k = ⊕_{p+q=k} A^{p,q}``, ``d = d' + d''``."""
    c = _cache(c).c
    dims, reps = {}, {} if with_representatives else None
    for k in c.total_degrees():
        ker, im = _total_kernel_image(c, k)
        dims[k] = quotient_dim(ker, im)
        if with_representatives:
            reps[k] = complement(ker, im)
    return CohomologyReport("derham", dims, reps)


def cohomology_tables(c: DoubleComplex, theories: Iterable[str] = THEORIES, with_representatives: bool = True) -> dict[str, CohomologyReport]:
    cache = _cache(c)
    out = {}
    for t in theories:
        if t == "bc":
            out[t] = bott_chern(cache, with_representatives)
        elif t == "aeppli":
            out[t] = aeppli(cache, with_representatives)
        elif t == "dprime":
            out[t] = _bidegree_report(cache, "dprime", "ker1", "im1", with_representatives)
        elif t == "dsecond":
            out[t] = _bidegree_report(cache, "dsecond", "ker2", "im2", with_representatives)
        elif t == "derham":
            out[t] = de_rham(cache, with_representatives)
        else:
            raise ValueError(f"unknown theory {t!r}; expected one of {THEORIES}")
    return out


# -- lattice invariants --------------------------------------------------------

@dataclass(frozen=True)
class LatticeInvariants:
    """Cokernel dimensions of the inclusions in the two diagrams at one bidegree."""

    p0: int
    pPlus: int
    pMinus: int
    sPlus: int
    sMinus: int
    s0: int
    u0: int
    uPlus: int
    uMinus: int
    vPlus: int
    vMinus: int
    v0: int

    def to_json(self) -> dict:
        return asdict(self)


def _invariants(lat: BidegreeLattice) -> LatticeInvariants:
    qd = quotient_dim
    return LatticeInvariants(
        p0=qd(lat.ker_both, lat.ker_both_im_sum),
        pPlus=qd(lat.ker_both_im_sum, lat.im1_ker2),
        pMinus=qd(lat.ker_both_im_sum, lat.ker1_im2),
        sPlus=qd(lat.im1_ker2, lat.im1_im2),
        sMinus=qd(lat.ker1_im2, lat.im1_im2),
        s0=qd(lat.im1_im2, lat.im12),
        u0=qd(lat.ker12, lat.ker_sum),
        uPlus=qd(lat.ker_sum, lat.ker1_plus_im2),
        uMinus=qd(lat.ker_sum, lat.im1_plus_ker2),
        vPlus=qd(lat.ker1_plus_im2, lat.im_sum_plus_ker_both),
        vMinus=qd(lat.im1_plus_ker2, lat.im_sum_plus_ker_both),
        v0=qd(lat.im_sum_plus_ker_both, lat.im_sum),
    )


def lattice_invariants(c) -> dict[Bidegree, LatticeInvariants]:
    cache = _cache(c)
    return {pq: _invariants(cache.at(*pq)) for pq in cache.c.hull_points()}


# -- the d'd''-lemma -----------------------------------------------------------

def ddbar_lemma_at(c, p: int, q: int) -> bool:
    """``im d' ∩ ker d'' = ker d' ∩ im d'' = im d'd''`` inside ``A^{p,q}``."""
    return _cache(c).at(p, q).lemma_holds()


def ddbar_lemma_in_degree(c, k: int) -> bool:
    """The lemma at every bidegree of total degree ``k``."""
    cache = _cache(c)
    return all(cache.at(p, q).lemma_holds() for (p, q) in cache.c.support if p + q == k)


# -- natural maps --------------------------------------------------------------

@dataclass
class MapInfo:
    """An induced map ``G/H -> G'/H'`` realized on representative bases."""

    name: str
    index: object
    source_dim: int
    target_dim: int
    matrix: Matrix
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "index": list(self.index) if isinstance(self.index, tuple) else self.index,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "injective": self.injective,
            "surjective": self.surjective,
        }


class MapConsistencyError(AssertionError):
    pass


def induced_map(name: str, index, G: Subspace, H: Subspace, Gt: Subspace, Ht: Subspace) -> MapInfo:
    """Matrix of ``G/H -> Gt/Ht`` and its injectivity/surjectivity.

    The flags come from the rank of the realized matrix; they are cross-checked
    against the subspace criteria ``G ∩ Ht = H`` (injective) and
    ``Gt = G + Ht`` (surjective).
    """
    src = complement(G, H)
    tgt = complement(Gt, Ht)
    if tgt.cols == 0 or src.cols == 0:
        mat = Matrix.zeros(tgt.cols, src.cols)
    else:
        frame = Ht.basis.hstack(tgt) if Ht.dim else tgt
        coords = frame.solve(src)
        mat = coords.submatrix(range(Ht.dim, Ht.dim + tgt.cols), range(src.cols))
    r = mat.rank()
    injective, surjective = r == src.cols, r == tgt.cols
    if injective != (subspace_intersection(G, Ht) == H) or surjective != (Gt == subspace_sum(G, Ht)):
        raise MapConsistencyError(f"rank and subspace criteria disagree for {name}{index}")
    return MapInfo(name, index, src.cols, tgt.cols, mat, injective, surjective)


def _embed(c: DoubleComplex, k: int, parts: dict[Bidegree, Subspace]) -> Subspace:
    """Direct sum of per-bidegree subspaces as a subspace of ``A^k``."""
    n = c.total_dim(k)
    vecs = []
    for (pq, off, d) in c.total_layout(k):
        s = parts.get(pq)
        if s is None:
            continue
        for v in s.vectors():
            full = [0] * n
            full[off:off + d] = v
            vecs.append(full)
    return Subspace(n, vecs)


@dataclass
class NaturalMaps:
    phi: dict = field(default_factory=dict)          # (p,q) -> MapInfo, H_BC -> H^{p+q}
    phi_total: dict = field(default_factory=dict)    # k -> MapInfo
    psi_total: dict = field(default_factory=dict)    # k -> MapInfo
    phi_plus: dict = field(default_factory=dict)
    phi_minus: dict = field(default_factory=dict)
    psi_plus: dict = field(default_factory=dict)
    psi_minus: dict = field(default_factory=dict)

    def all_maps(self) -> list[MapInfo]:
        return [m for d in (self.phi, self.phi_total, self.psi_total, self.phi_plus,
                            self.phi_minus, self.psi_plus, self.psi_minus) for m in d.values()]

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.all_maps()]


def natural_maps(c, pad: int = 1) -> NaturalMaps:
    """All maps induced by inclusions and quotients between the five theories.

    Indices run over the support hull padded by ``pad`` so implications that
    step one degree outside the support can be evaluated.
    """
    cache = _cache(c)
    cx = cache.c
    out = NaturalMaps()
    points = list(cx.hull_points(pad))
    if not points:
        return out
    ks = range(min(p + q for p, q in points), max(p + q for p, q in points) + 1)
    total = {k: _total_kernel_image(cx, k) for k in ks}

    for p, q in points:
        lat = cache.at(p, q)
        out.phi_plus[(p, q)] = induced_map("phi+", (p, q), lat.ker_both, lat.im12, lat.ker1, lat.im1)
        out.phi_minus[(p, q)] = induced_map("phi-", (p, q), lat.ker_both, lat.im12, lat.ker2, lat.im2)
        out.psi_plus[(p, q)] = induced_map("psi+", (p, q), lat.ker1, lat.im1, lat.ker12, lat.im_sum)
        out.psi_minus[(p, q)] = induced_map("psi-", (p, q), lat.ker2, lat.im2, lat.ker12, lat.im_sum)
        k = p + q
        kerd, imd = total[k]
        out.phi[(p, q)] = induced_map(
            "phi", (p, q),
            _embed(cx, k, {(p, q): lat.ker_both}), _embed(cx, k, {(p, q): lat.im12}), kerd, imd,
        )

    for k in ks:
        kerd, imd = total[k]
        blocks = [pq for pq, _, _ in cx.total_layout(k)]
        lats = {pq: cache.at(*pq) for pq in blocks}
        out.phi_total[k] = induced_map(
            "phi", k,
            _embed(cx, k, {pq: l.ker_both for pq, l in lats.items()}),
            _embed(cx, k, {pq: l.im12 for pq, l in lats.items()}),
            kerd, imd,
        )
        out.psi_total[k] = induced_map(
            "psi", k, kerd, imd,
            _embed(cx, k, {pq: l.ker12 for pq, l in lats.items()}),
            _embed(cx, k, {pq: l.im_sum for pq, l in lats.items()}),
        )
    return out


# -- the equivalence theorem ---------------------------------------------------

@dataclass(frozen=True)
class TheoremRecord:
    lemma: bool
    bc_equals_row_column: bool
    aeppli_equals_row_column: bool
    bc_equals_betti: bool
    aeppli_equals_betti: bool

    @property
    def values(self) -> tuple[bool, ...]:
        return (self.lemma, self.bc_equals_row_column, self.aeppli_equals_row_column,
                self.bc_equals_betti, self.aeppli_equals_betti)

    @property
    def consistent(self) -> bool:
        return len(set(self.values)) == 1

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["consistent"] = self.consistent
        return doc


def check_theorem_equivalences(c) -> TheoremRecord:
    """Evaluate the five conditions that are equivalent on bounded complexes."""
    cache = _cache(c)
    cx = cache.c
    pts = [pq for pq in cx.hull_points()]
    lats = [cache.at(*pq) for pq in pts]
    lemma = all(l.lemma_holds() for l in lats)
    bc_rc = all(l.h_bc == l.h_dprime == l.h_dsecond for l in lats)
    a_rc = all(l.h_a == l.h_dprime == l.h_dsecond for l in lats)
    betti = de_rham(cache, with_representatives=False).dims
    bc_k: dict[int, int] = {}
    a_k: dict[int, int] = {}
    for (p, q), l in zip(pts, lats):
        bc_k[p + q] = bc_k.get(p + q, 0) + l.h_bc
        a_k[p + q] = a_k.get(p + q, 0) + l.h_a
    ks = set(betti) | set(bc_k)
    bc_b = all(bc_k.get(k, 0) == betti.get(k, 0) for k in ks)
    a_b = all(a_k.get(k, 0) == betti.get(k, 0) for k in ks)
    return TheoremRecord(lemma, bc_rc, a_rc, bc_b, a_b)
