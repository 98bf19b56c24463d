"""Elementary double complexes, direct sums and basis scrambling for test corpora.

Dots, squares and zigzags are the indecomposable bounded double complexes.
A zigzag of length ``L`` has ``L`` basis vectors joined by ``L - 1`` arrows
that alternate between ``d'`` and ``d''``; length 1 is a dot.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Literal, Sequence

from ..exact import ZERO, GaussianRational, Matrix, SingularMatrixError
from .complex import Bidegree, DoubleComplex

__all__ = [
    "ORIENTATIONS",
    "Shape",
    "dot",
    "square",
    "zigzag",
    "direct_sum",
    "scramble_basis",
    "generate_elementary",
    "random_complex",
]

Orientation = Literal["source-dprime", "source-dsecond", "target-dprime", "target-dsecond"]
ORIENTATIONS: tuple[Orientation, ...] = ("source-dprime", "source-dsecond", "target-dprime", "target-dsecond")


@dataclass(frozen=True)
class Shape:
    kind: Literal["dot", "square", "zigzag"]
    p: int
    q: int
    length: int = 1
    orientation: Orientation = "source-dprime"

    @property
    def honest_zigzag(self) -> bool:
        return self.kind == "zigzag" and self.length >= 2


def _from_arrows(positions: Sequence[Bidegree], arrows: Sequence[tuple[int, int, str, int]]) -> DoubleComplex:
    """Build a complex from basis vectors at ``positions`` and arrows
    ``(src, tgt, 'dprime'|'dsecond', coefficient)`` between vector indices."""
    support: dict[Bidegree, int] = {}
    slot: list[tuple[Bidegree, int]] = []
    for pos in positions:
        slot.append((pos, support.get(pos, 0)))
        support[pos] = support.get(pos, 0) + 1
    entries: dict[str, dict[Bidegree, list[list[GaussianRational]]]] = {"dprime": {}, "dsecond": {}}
    for s, t, kind, coef in arrows:
        (sp, si), (tp, ti) = slot[s], slot[t]
        step = (1, 0) if kind == "dprime" else (0, 1)
        if (tp[0] - sp[0], tp[1] - sp[1]) != step:
            raise ValueError(f"arrow {s}->{t} does not have the bidegree of {kind}")
        block = entries[kind].setdefault(sp, [[ZERO] * support[sp] for _ in range(support[tp])])
        block[ti][si] = block[ti][si] + coef
    maps = {k: {pq: Matrix(rows) for pq, rows in v.items()} for k, v in entries.items()}
    return DoubleComplex(support, maps["dprime"], maps["dsecond"])


def dot(p: int = 0, q: int = 0) -> DoubleComplex:
    return DoubleComplex({(p, q): 1})


def square(p: int = 0, q: int = 0) -> DoubleComplex:
    """``x``, ``d'x``, ``d''x`` and ``d'd''x`` with ``d''(d'x) = -d'd''x``."""
    pos = [(p, q), (p + 1, q), (p, q + 1), (p + 1, q + 1)]
    arrows = [
        (0, 1, "dprime", 1),
        (0, 2, "dsecond", 1),
        (2, 3, "dprime", 1),
        (1, 3, "dsecond", -1),
    ]
    return _from_arrows(pos, arrows)


def zigzag(p: int, q: int, length: int, orientation: Orientation = "source-dprime") -> DoubleComplex:
    """Staircase of ``length`` vectors starting at ``(p, q)``.

    ``orientation`` says whether the first vector is the source or the target
    of the first arrow and whether that arrow is ``d'`` or ``d''``. Arrow kinds
    and source/target roles alternate along the path.
    """
    if length < 1:
        raise ValueError("zigzag length must be at least 1")
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    role, kind = orientation.split("-")
    is_source = role == "source"
    positions = [(p, q)]
    arrows = []
    for i in range(length - 1):
        step = (1, 0) if kind == "dprime" else (0, 1)
        cur = positions[-1]
        if is_source:
            nxt = (cur[0] + step[0], cur[1] + step[1])
            arrows.append((i, i + 1, kind, 1))
        else:
            nxt = (cur[0] - step[0], cur[1] - step[1])
            arrows.append((i + 1, i, kind, 1))
        positions.append(nxt)
        is_source = not is_source
        kind = "dsecond" if kind == "dprime" else "dprime"
    return _from_arrows(positions, arrows)


def generate_elementary(shape: Shape) -> DoubleComplex:
    if shape.kind == "dot":
        return dot(shape.p, shape.q)
    if shape.kind == "square":
        return square(shape.p, shape.q)
    if shape.kind == "zigzag":
        return zigzag(shape.p, shape.q, shape.length, shape.orientation)
    raise ValueError(f"unknown shape {shape.kind!r}")


def direct_sum(cs: Sequence[DoubleComplex]) -> DoubleComplex:
    support: dict[Bidegree, int] = {}
    for c in cs:
        for pq, d in c.support.items():
            support[pq] = support.get(pq, 0) + d
    maps = {}
    for name, getter in (("dprime", DoubleComplex.d1), ("dsecond", DoubleComplex.d2)):
        keys = sorted({pq for c in cs for pq in getattr(c, name)})
        maps[name] = {pq: Matrix.block_diagonal([getter(c, *pq) for c in cs]) for pq in keys}
    return DoubleComplex(support, maps["dprime"], maps["dsecond"])


def _random_invertible(rng: random.Random, n: int, complex_entries: bool) -> tuple[Matrix, Matrix]:
    while True:
        rows = []
        for _ in range(n):
            rows.append([
                GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1) if complex_entries else 0)
                for _ in range(n)
            ])
        m = Matrix(rows)
        try:
            return m, m.inverse()
        except SingularMatrixError:
            continue


def scramble_basis(c: DoubleComplex, seed: int, complex_entries: bool = True) -> DoubleComplex:
    """Conjugate every slice by a seeded random invertible matrix ``S``.

    New coordinates are ``S x``, so ``d' -> S_{p+1,q} d' S_{p,q}^{-1}``.
    """
    rng = random.Random(seed)
    change = {pq: _random_invertible(rng, d, complex_entries) for pq, d in c.support.items()}

    def conj(m: Matrix, src: Bidegree, tgt: Bidegree) -> Matrix:
        return change[tgt][0] @ m @ change[src][1]

    dp = {(p, q): conj(m, (p, q), (p + 1, q)) for (p, q), m in c.dprime.items()}
    ds = {(p, q): conj(m, (p, q), (p, q + 1)) for (p, q), m in c.dsecond.items()}
    return DoubleComplex(c.support, dp, ds)


def random_shapes(rng: random.Random, max_parts: int = 4, max_length: int = 5, box: int = 2) -> list[Shape]:
    shapes = []
    for _ in range(rng.randint(1, max_parts)):
        kind = rng.choice(("dot", "square", "zigzag"))
        p, q = rng.randint(-box, box), rng.randint(-box, box)
        if kind == "zigzag":
            shapes.append(Shape("zigzag", p, q, rng.randint(1, max_length), rng.choice(ORIENTATIONS)))
        else:
            shapes.append(Shape(kind, p, q))
    return shapes


def random_complex(seed: int, max_parts: int = 4, max_length: int = 5, scramble: bool = True) -> tuple[DoubleComplex, list[Shape]]:
    """A seeded random direct sum of elementary pieces, optionally scrambled."""
    rng = random.Random(seed)
    shapes = random_shapes(rng, max_parts, max_length)
    c = direct_sum([generate_elementary(s) for s in shapes])
    if scramble:
        c = scramble_basis(c, rng.randrange(2**32))
    return c, shapes
