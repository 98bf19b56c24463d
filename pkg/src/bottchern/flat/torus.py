"""Cohomology of flat tori summed over a box of Fourier modes."""
from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..double_complex import THEORIES, cohomology_tables
from ..exact import I, GaussianRational
from .model import FlatBiGcModel
from .modes import PAIRS, delta_components, geometry, reindex_to_double_complex, slice_of_bidegree

__all__ = [
    "TorusReport",
    "mode_box",
    "mode_cohomology",
    "torus_cohomology",
    "PDE_DESCRIPTORS",
    "PdeCheck",
    "pde_slice_check",
    "is_point_symmetric",
    "diamond_rows",
    "diamond_csv",
    "diamond_text",
]

# de Rham of the reindexed total complex, labelled by the grading it refines
TOTAL_OPERATOR = {"pp": "partial1", "pb": "partial2", "bp": "partial2_bar", "bb": "partial1_bar"}


def mode_box(n: int, radius: int) -> list[tuple[int, ...]]:
    if radius < 0:
        raise ValueError("mode-box radius must be non-negative")
    return list(itertools.product(range(-radius, radius + 1), repeat=2 * n))


def _derham_key(pair: str, n: int, total: int) -> int:
    p, q = slice_of_bidegree(pair, n, total, 0)
    return p if pair in ("pp", "bb") else q


def mode_cohomology(model: FlatBiGcModel, k: Sequence[int], pair: str = "pp", theories: Iterable[str] = THEORIES) -> dict[str, dict]:
    """Per-theory dimensions at one mode, keyed by ``(p, q)`` (or grading index for ``derham``)."""
    theories = tuple(theories)
    g = geometry(model)
    c = reindex_to_double_complex(delta_components(model, k), pair)
    tables = cohomology_tables(c, theories, with_representatives=False)
    out = {}
    for t in theories:
        dims = tables[t].dims
        if t == "derham":
            out[t] = {_derham_key(pair, g.n, tot): d for tot, d in dims.items()}
        else:
            mapped = {slice_of_bidegree(pair, g.n, *ab): d for ab, d in dims.items()}
            out[t] = {key: mapped.get(key, 0) for key in g.keys}
    return out


def _mode_task(args):
    model, k, pair, theories = args
    return k, mode_cohomology(model, k, pair, theories)


@dataclass
class TorusReport:
    """Totals over the mode box plus the nonzero per-mode pieces."""

    label: str
    n: int
    pair: str
    radius: int
    theories: tuple[str, ...]
    slices: dict
    totals: dict
    per_mode: dict = field(default_factory=dict)
    nonzero_modes: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        """True when no ``k != 0`` contributed anything."""
        return not self.nonzero_modes

    def to_json(self) -> dict:
        def enc(theory, dims):
            if theory == "derham":
                return [{"index": k, "dim": d} for k, d in sorted(dims.items())]
            return [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(dims.items())]

        return {
            "label": self.label,
            "n": self.n,
            "pair": self.pair,
            "mode_box_radius": self.radius,
            "modes_scanned": (2 * self.radius + 1) ** (2 * self.n),
            "slices": [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(self.slices.items())],
            "totals": {t: enc(t, self.totals[t]) for t in self.theories},
            "total_operator": TOTAL_OPERATOR[self.pair],
            "per_mode": [
                {"k": list(k), "dims": {t: enc(t, {a: b for a, b in dims[t].items() if b}) for t in self.theories}}
                for k, dims in sorted(self.per_mode.items())
            ],
            "nonzero_modes": [list(k) for k in self.nonzero_modes],
            "complete": self.complete,
        }


def torus_cohomology(
    model: FlatBiGcModel,
    theories: Iterable[str] = ("bc",),
    pair: str = "pp",
    radius: int = 2,
    workers: int | None = None,
) -> TorusReport:
    """Sum per-mode cohomology over ``k ∈ {-R..R}^{2n}``.

    ``workers > 1`` spreads modes over processes; aggregation is by sorted
    mode so the result does not depend on scheduling.
    """
    theories = tuple(theories)
    for t in theories:
        if t not in THEORIES:
            raise ValueError(f"unknown theory {t!r}; expected one of {THEORIES}")
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {tuple(PAIRS)}")
    g = geometry(model)
    modes = mode_box(model.n, radius)
    tasks = [(model, k, pair, theories) for k in modes]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_mode_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_mode_task(t) for t in tasks]
    totals = {t: {} for t in theories}
    per_mode, nonzero = {}, []
    zero = tuple([0] * (2 * model.n))
    for k, dims in sorted(results):
        contributed = False
        for t in theories:
            for key, d in dims[t].items():
                totals[t][key] = totals[t].get(key, 0) + d
                contributed = contributed or d > 0
        if contributed:
            per_mode[k] = dims
            if k != zero:
                nonzero.append(k)
    return TorusReport(model.label, model.n, pair, radius, theories, g.dims(), totals, per_mode, nonzero)


# -- holomorphy constraints on a single character ---------------------------

PDE_DESCRIPTORS = {
    (0, -2): "d/dzbar_j f = 0 for all j",
    (0, 2): "d/dz_j f = 0 for all j",
    (-2, 0): "d/dz_j f = d/dzbar_j f = 0 for all j",
}


@dataclass(frozen=True)
class PdeCheck:
    descriptor: tuple[int, int]
    k: tuple[int, ...]
    dim: int
    constraint_holds: bool

    @property
    def agrees(self) -> bool:
        return self.dim == (1 if self.constraint_holds else 0)


def _symbols(k: Sequence[int]) -> tuple[list, list]:
    """Symbols of ``∂/∂z_j`` and ``∂/∂z̄_j`` on ``e^{ik·x}`` with ``z_j = x_j + i y_j``."""
    dz, dzbar = [], []
    for j in range(len(k) // 2):
        kx, ky = GaussianRational(k[2 * j]), GaussianRational(k[2 * j + 1])
        dz.append((I * kx + ky) / 2)
        dzbar.append((I * kx - ky) / 2)
    return dz, dzbar


def pde_slice_check(model: FlatBiGcModel, k: Sequence[int], descriptor: tuple[int, int]) -> PdeCheck:
    """Compare the per-mode BC dimension with the holomorphy constraint on ``e^{ik·x}``."""
    descriptor = tuple(descriptor)
    if descriptor not in PDE_DESCRIPTORS:
        raise ValueError(f"unsupported descriptor {descriptor}; supported: {sorted(PDE_DESCRIPTORS)}")
    k = tuple(int(x) for x in k)
    dims = mode_cohomology(model, k, "pp", ("bc",))["bc"]
    dz, dzbar = _symbols(k)
    if descriptor == (0, -2):
        holds = not any(dzbar)
    elif descriptor == (0, 2):
        holds = not any(dz)
    else:
        holds = not any(dz) and not any(dzbar)
    return PdeCheck(descriptor, k, dims.get(descriptor, 0), holds)


# -- symmetry and display -------------------------------------------------------


def is_point_symmetric(dims: dict, other: dict | None = None) -> bool:
    """``dims[(p, q)] == other[(-p, -q)]`` for every key (``other`` defaults to ``dims``)."""
    other = dims if other is None else other
    keys = set(dims) | {(-p, -q) for p, q in other}
    return all(dims.get(key, 0) == other.get((-key[0], -key[1]), 0) for key in keys)


def diamond_rows(dims: dict, slices: dict, n: int) -> list[list]:
    """Rows ``p = n..-n`` (descending), columns ``q = -n..n``; ``None`` for absent slices."""
    rows = []
    for p in range(n, -n - 1, -1):
        rows.append([dims.get((p, q), 0) if (p, q) in slices else None for q in range(-n, n + 1)])
    return rows


def diamond_csv(dims: dict, slices: dict, n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p\\q", *range(-n, n + 1)])
    for p, row in zip(range(n, -n - 1, -1), diamond_rows(dims, slices, n)):
        w.writerow([p, *("" if x is None else x for x in row)])
    return buf.getvalue()


def diamond_text(dims: dict, slices: dict, n: int) -> str:
    width = max([len(str(d)) for d in dims.values()] + [len(str(n)) + 1, 2])
    head = " " * (width + 3) + " ".join(f"{q:>{width}}" for q in range(-n, n + 1))
    lines = [head]
    for p, row in zip(range(n, -n - 1, -1), diamond_rows(dims, slices, n)):
        cells = " ".join(f"{'.' if x is None else x:>{width}}" for x in row)
        lines.append(f"{p:>{width}} | {cells}")
    return "\n".join(lines) + "\n"
