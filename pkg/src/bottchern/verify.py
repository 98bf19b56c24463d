"""Property suites over generated double complexes and the built-in flat models.

Each property returns a boolean per instance; a suite run counts passes and
keeps the first few failures with enough context to reproduce them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .double_complex import (
    DoubleComplex,
    ddbar_lemma_in_degree,
    cohomology_tables,
    check_theorem_equivalences,
    lattice_invariants,
    natural_maps,
    random_complex,
)
from .double_complex.cohomology import _Cache
from .exact import Matrix
from .flat import (
    LAPLACIAN_PAIRS,
    PAIRS,
    anticommutators,
    check_adjoint_formulas,
    delta_components,
    geometry,
    harmonic_decomposition,
    kahler_identities,
    laplacians,
    reality_relations,
    reindex_to_double_complex,
    is_point_symmetric,
    t2_model,
    t4_model,
    torus_cohomology,
)
from .spinor import joint_grading, vandermonde_joint_grading

__all__ = [
    "SUITES",
    "SuiteResult",
    "core_properties",
    "mode_properties",
    "model_properties",
    "run_suite",
    "corrupt_sign",
]

SUITES = ("core", "geometry", "all")


@dataclass
class SuiteResult:
    suite: str
    seed: int
    count: int
    passes: dict = field(default_factory=dict)
    runs: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    validation_failures: list = field(default_factory=list)

    def record(self, prop: str, ok: bool, context: str):
        self.runs[prop] = self.runs.get(prop, 0) + 1
        self.passes[prop] = self.passes.get(prop, 0) + (1 if ok else 0)
        if not ok and len(self.failures) < 50:
            self.failures.append({"property": prop, "instance": context})

    @property
    def ok(self) -> bool:
        return not self.failures and not self.validation_failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "count": self.count,
            "properties": [
                {"name": k, "passed": self.passes[k], "runs": self.runs[k]} for k in sorted(self.runs)
            ],
            "failures": self.failures,
            "validation_failures": self.validation_failures,
            "ok": self.ok,
        }


# -- double complexes ---------------------------------------------------------


def _alternating(dims_by_degree: dict) -> int:
    return sum((-1) ** k * d for k, d in dims_by_degree.items())


def _map(maps: dict, key):
    """Missing indices lie outside the padded hull, where every map is ``0 -> 0``."""
    m = maps.get(key)
    return (True, True) if m is None else (m.injective, m.surjective)


def core_properties(c: DoubleComplex, honest_zigzag: bool | None = None) -> dict[str, bool]:
    """Every double-complex property, evaluated on one complex."""
    cache = _Cache(c)
    out: dict[str, bool] = {}
    rec = check_theorem_equivalences(cache)
    out["theorem: five conditions coincide"] = rec.consistent
    if honest_zigzag is not None:
        out["theorem: all-true iff zigzag-free"] = rec.values == ((not honest_zigzag),) * 5

    tables = cohomology_tables(cache, with_representatives=False)
    inv = lattice_invariants(cache)
    compare = lemma_ids = expansions = hd = True
    for pq, x in inv.items():
        lat = cache.at(*pq)
        compare &= lat.h_bc + lat.h_a == lat.h_dprime + lat.h_dsecond + x.u0 + x.s0
        lemma_ids &= x.pPlus == x.sMinus and x.pMinus == x.sPlus and x.uPlus == x.vMinus and x.uMinus == x.vPlus and x.p0 == x.v0
        expansions &= (
            lat.h_bc == x.p0 + x.pPlus + x.sPlus + x.s0 == x.p0 + x.pMinus + x.sMinus + x.s0
            and lat.h_a == x.u0 + x.uPlus + x.vPlus + x.v0 == x.u0 + x.uMinus + x.vMinus + x.v0
        )
        hd &= lat.h_dprime == x.sMinus + x.vPlus + x.v0 and lat.h_dsecond == x.sPlus + x.vMinus + x.v0
    out["lattice: h_BC + h_A = h_d' + h_d'' + u0 + s0"] = compare
    out["lattice: p+ = s-, p- = s+, u+ = v-, u- = v+, p0 = v0"] = lemma_ids
    out["lattice: h_BC and h_A expansions"] = expansions
    out["lattice: h_d' = s- + v+ + v0, h_d'' = s+ + v- + v0"] = hd

    maps = natural_maps(cache)
    ks = sorted(set(maps.phi_total) | set(maps.psi_total))
    derham_item1 = derham_item2 = derham_item3 = True
    for k in ks:
        phi_inj, _ = _map(maps.phi_total, k)
        _, psi_prev_surj = _map(maps.psi_total, k - 1)
        lemma_k = ddbar_lemma_in_degree(cache, k)
        derham_item1 &= phi_inj == psi_prev_surj == lemma_k
        if phi_inj:
            derham_item2 &= _map(maps.phi_total, k - 1)[1]
        if _map(maps.psi_total, k)[1]:
            derham_item3 &= _map(maps.psi_total, k + 1)[0]
    out["bc+derham: lemma in degree k <=> phi^k injective <=> psi^(k-1) surjective"] = derham_item1
    out["bc+derham: phi^k injective => phi^(k-1) surjective"] = derham_item2
    out["bc+derham: psi^k surjective => psi^(k+1) injective"] = derham_item3

    partial1 = partial2 = partial3 = True
    for (p, q) in maps.phi_plus:
        lemma = cache.at(p, q).lemma_holds()
        inj = _map(maps.phi_plus, (p, q))[0] and _map(maps.phi_minus, (p, q))[0]
        surj = _map(maps.psi_plus, (p - 1, q))[1] and _map(maps.psi_minus, (p, q - 1))[1]
        partial1 &= lemma == inj == surj
        if _map(maps.phi_plus, (p, q))[0]:
            partial2 &= _map(maps.phi_minus, (p - 1, q))[1]
        if _map(maps.phi_minus, (p, q))[0]:
            partial2 &= _map(maps.phi_plus, (p, q - 1))[1]
        if _map(maps.psi_plus, (p, q))[1]:
            partial3 &= _map(maps.psi_minus, (p + 1, q))[0]
        # the mirror clause lands at (p, q+1); (p+1, q) has counterexamples
        if _map(maps.psi_minus, (p, q))[1]:
            partial3 &= _map(maps.psi_plus, (p, q + 1))[0]
    out["bc+partial: lemma at (p,q) <=> phi+- injective <=> psi+(p-1,q), psi-(p,q-1) surjective"] = partial1
    out["bc+partial: phi+- injective => neighbouring phi-+ surjective"] = partial2
    out["bc+partial: psi+- surjective => neighbouring psi-+ injective"] = partial3

    slices = {}
    for (p, q), d in c.support.items():
        slices[p + q] = slices.get(p + q, 0) + d
    chi = _alternating(slices)
    euler = all(_alternating(tables[t].by_total_degree()) == chi for t in ("derham", "dprime", "dsecond"))
    if rec.lemma:
        euler &= all(_alternating(tables[t].by_total_degree()) == chi for t in ("bc", "aeppli"))
    out["euler characteristic"] = euler
    return out


def corrupt_sign(c: DoubleComplex) -> DoubleComplex:
    """Flip the sign of one entry of ``d''`` so that some defining identity fails."""
    for (p, q), m in c.dsecond.items():
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j]:
                    rows = m.row_list()
                    rows[i][j] = -rows[i][j]
                    bad = DoubleComplex(c.support, c.dprime, {**c.dsecond, (p, q): Matrix(rows)})
                    if not bad.is_valid():
                        return bad
    raise ValueError("complex has no entry whose corruption breaks an identity")


# -- flat models ----------------------------------------------------------------


def mode_properties(model, k, with_harmonic: bool = True) -> dict[str, bool]:
    out: dict[str, bool] = {}
    mc = delta_components(model, k)
    out["component relations (anticommutators, squares, four-term)"] = all(anticommutators(model, k).values())
    out["reality relations"] = all(reality_relations(model, k).values())
    adj = check_adjoint_formulas(model, k)
    out["adjoint formula -star^-1 d star matches the exact adjoint"] = all(adj.inverse_star.values())
    out["positive-form adjoint is a fixed sign times -star^-1 d star"] = len(set(adj.positive_sign.values())) == 1 and 0 not in adj.positive_sign.values()
    out["kahler identities"] = all(kahler_identities(model, k).values())
    lap = laplacians(model, k, mc)
    out["laplacians: D_d = 2D_p1 = 2D_p2 = 4D_d+ = 4D_d-"] = (
        lap.d == lap.partial1.scale(2) == lap.partial2.scale(2)
        == lap.delta["delta_plus"].scale(4) == lap.delta["delta_minus"].scale(4)
    )
    if with_harmonic:
        g = geometry(model)
        out["harmonic decomposition"] = all(
            harmonic_decomposition(model, k, ij, pq, lap).verdict for ij in LAPLACIAN_PAIRS for pq in g.keys
        )
    c = reindex_to_double_complex(mc, "pp")
    out["reindexed complex is valid"] = c.is_valid()
    rec = check_theorem_equivalences(c)
    out["reindexed complex satisfies the d'd''-lemma"] = rec.lemma and rec.consistent
    t = cohomology_tables(c, ("bc", "dprime", "dsecond"), with_representatives=False)
    out["h_d+ = h_d- = h_BC(d+ d-)"] = t["bc"].dims == t["dprime"].dims == t["dsecond"].dims
    for pair in PAIRS:
        if not reindex_to_double_complex(mc, pair).is_valid():
            out["reindexed complex is valid"] = False
    return out


def model_properties(model, radius: int = 1) -> dict[str, bool]:
    """Mode-independent checks: grading completeness and the symmetries of the torus tables."""
    out: dict[str, bool] = {}
    grading = joint_grading(model.J1, model.J2)
    out["grading: dimensions sum to 4^n"] = sum(grading.dims().values()) == 4 ** model.n and grading.is_direct()
    out["grading: intersection equals Vandermonde cross-check"] = grading.pieces == vandermonde_joint_grading(model.J1, model.J2).pieces
    pp = torus_cohomology(model, ("bc", "dprime", "dsecond"), "pp", radius)
    bb = torus_cohomology(model, ("bc",), "bb", radius)
    out["serre: h^{p,q} = h^{-p,-q} for d+, d-, BC(d+ d-)"] = all(is_point_symmetric(pp.totals[t]) for t in pp.theories)
    out["conjugation: BC(d+ d-)^{p,q} = BC(db+ db-)^{-p,-q}"] = is_point_symmetric(pp.totals["bc"], bb.totals["bc"])
    out["nonzero modes contribute nothing"] = pp.complete and bb.complete
    return out


# -- runner ----------------------------------------------------------------------


def _run_core(res: SuiteResult, rng: random.Random, count: int, inject_fault: bool):
    for i in range(count):
        seed = rng.randrange(2**32)
        c, shapes = random_complex(seed)
        ctx = f"random_complex({seed})"
        if inject_fault and i == 0:
            try:
                c = corrupt_sign(c)
                ctx += " with a corrupted sign"
            except ValueError:
                pass
        bad = c.validate()
        if bad:
            res.validation_failures.append({"instance": ctx, "violations": [str(v) for v in bad]})
            continue
        honest = any(s.honest_zigzag for s in shapes)
        for prop, ok in core_properties(c, honest).items():
            res.record(prop, ok, ctx)


def _run_geometry(res: SuiteResult, rng: random.Random, count: int):
    for model in (t2_model(), t4_model()):
        for prop, ok in model_properties(model).items():
            res.record(prop, ok, model.label)
        for i in range(count):
            k = tuple(rng.randint(-3, 3) for _ in range(2 * model.n))
            ctx = f"{model.label} k={list(k)}"
            # the harmonic check dominates the cost on T4, so it runs on the first modes only
            for prop, ok in mode_properties(model, k, with_harmonic=model.n == 1 or i < 5).items():
                res.record(prop, ok, ctx)


def run_suite(suite: str, seed: int, count: int, inject_fault: bool = False) -> SuiteResult:
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES}")
    if count < 1:
        raise ValueError("count must be at least 1")
    res = SuiteResult(suite, seed, count)
    rng = random.Random(seed)
    if suite in ("core", "all"):
        _run_core(res, rng, count, inject_fault)
    if suite in ("geometry", "all"):
        _run_geometry(res, rng, count)
    return res
