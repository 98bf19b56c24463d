from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from bottchern.exact import (
    I,
    ContainmentError,
    DimensionError,
    GaussianRational,
    Matrix,
    ScalarParseError,
    SingularMatrixError,
    Subspace,
    complement,
    eigen_components,
    image_basis,
    kernel_basis,
    parse_scalar,
    quotient_dim,
    rref,
    solve_vandermonde,
    subspace_intersection,
    subspace_sum,
)

from conftest import matrices, scalars, vectors


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [
        sympy.Rational(x.real.numerator, x.real.denominator)
        + sympy.I * sympy.Rational(x.imag.numerator, x.imag.denominator)
        for x in m.entries()
    ])


# -- scalars -------------------------------------------------------------------

@pytest.mark.parametrize("text,re_,im_", [
    ("-3", -3, 0),
    ("3/4", Fraction(3, 4), 0),
    ("2i", 0, 2),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("1/2+3/4i", Fraction(1, 2), Fraction(3, 4)),
    ("-1/2-1i", Fraction(-1, 2), -1),
    ("6/8", Fraction(3, 4), 0),
])
def test_parse_literals(text, re_, im_):
    z = parse_scalar(text)
    assert (z.real, z.imag) == (re_, im_)


@pytest.mark.parametrize("bad", ["3//4", "", "1/0", "i2", "1.5", "1+", "--1", "1/2/3"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad)


@given(scalars)
def test_literal_round_trip(z):
    assert parse_scalar(str(z)) == z


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).imag == 0


def test_imaginary_unit():
    assert I * I == -1
    assert hash(GaussianRational(3)) == hash(3)
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


# -- rref, kernel, image --------------------------------------------------------

def test_rref_examples():
    eye = Matrix.identity(2)
    assert rref(eye) == (eye, (0, 1))
    z = Matrix.zeros(2, 2)
    assert rref(z) == (z, ())
    assert rref(Matrix([[1, 2], [2, 4]])) == (Matrix([[1, 2], [0, 0]]), (0,))


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix.zeros(3, 3)) == Subspace.full(3)
    k = kernel_basis(Matrix([[1, 1]]))
    assert k == Subspace(2, [(1, -1)])
    assert Matrix([[1, 1]]).apply(k.vectors()[0]) == (0,)


def test_image_examples():
    assert image_basis(Matrix.identity(3)) == Subspace.full(3)
    assert image_basis(Matrix.zeros(2, 3)).dim == 0
    assert image_basis(Matrix([[1, 2], [2, 4]])) == Subspace(2, [(1, 2)])


@given(matrices())
def test_rank_matches_sympy(m):
    assert m.rank() == to_sympy(m).rank()


@given(matrices())
def test_rank_nullity(m):
    assert kernel_basis(m).dim + image_basis(m).dim == m.cols
    for v in kernel_basis(m).vectors():
        assert not any(m.apply(v))


@given(matrices(rows=3, cols=3))
def test_det_matches_sympy(m):
    d = to_sympy(m).det()
    ours = m.det()
    assert sympy.simplify(d - (sympy.Rational(ours.real.numerator, ours.real.denominator)
                               + sympy.I * sympy.Rational(ours.imag.numerator, ours.imag.denominator))) == 0


@given(matrices(rows=3, cols=3))
def test_inverse(m):
    if m.rank() < 3:
        with pytest.raises(SingularMatrixError):
            m.inverse()
    else:
        assert m @ m.inverse() == Matrix.identity(3)


def test_dimension_errors():
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionError):
        Subspace(2, [(1, 2, 3)])


# -- subspaces ------------------------------------------------------------------

def test_subspace_examples():
    u = Subspace(3, [(1, 2, 0), (0, 1, 1)])
    assert subspace_sum(u, u) == u and subspace_intersection(u, u) == u
    x, y = Subspace(2, [(1, 0)]), Subspace(2, [(0, 1)])
    assert subspace_intersection(x, y).dim == 0
    assert subspace_sum(x, y) == Subspace.full(2)
    assert quotient_dim(u, u) == 0
    assert quotient_dim(Subspace.full(3), Subspace.zero(3)) == 3
    assert quotient_dim(Subspace.full(2), Subspace(2, [(1, 1)])) == 1
    with pytest.raises(ContainmentError):
        quotient_dim(x, y)


@given(st.data())
def test_dimension_formula(data):
    u = Subspace(4, data.draw(vectors(4, 2)))
    w = Subspace(4, data.draw(vectors(4, 3)))
    assert subspace_sum(u, w).dim + subspace_intersection(u, w).dim == u.dim + w.dim


@given(st.data())
def test_canonical_form_is_basis_independent(data):
    vs = data.draw(vectors(4))
    u = Subspace(4, vs)
    coeffs = data.draw(st.lists(scalars, min_size=len(vs), max_size=len(vs)))
    extra = tuple(sum((c * x for c, x in zip(coeffs, col)), GaussianRational(0)) for col in zip(*vs)) if vs else ()
    w = Subspace(4, list(reversed(vs)) + ([extra] if vs else []))
    assert u == w


@st.composite
def nested_pairs(draw):
    """``H ⊆ G`` and ``H' ⊆ G'`` inside a common 4-space."""
    def pair():
        g = draw(vectors(4, draw(st.integers(0, 3))))
        coeffs = draw(st.lists(st.lists(scalars, min_size=len(g), max_size=len(g)), max_size=2))
        h = [tuple(sum((c * v[i] for c, v in zip(cs, g)), GaussianRational(0)) for i in range(4)) for cs in coeffs]
        return Subspace(4, g), Subspace(4, h)

    return pair(), pair()


@given(nested_pairs())
def test_modular_identity_for_sums(pairs):
    (G, H), (Gp, Hp) = pairs
    lhs = subspace_intersection(subspace_sum(Gp, H), subspace_sum(G, Hp))
    rhs = subspace_sum(subspace_sum(Hp, H), subspace_intersection(Gp, G))
    assert lhs == rhs


@given(nested_pairs())
def test_modular_identity_for_intersections(pairs):
    (G, H), (Gp, Hp) = pairs
    lhs = subspace_sum(subspace_intersection(Gp, H), subspace_intersection(G, Hp))
    rhs = subspace_intersection(subspace_intersection(Gp, G), subspace_sum(Hp, H))
    assert lhs == rhs


@given(st.data())
def test_complement(data):
    big = Subspace(4, data.draw(vectors(4)))
    small = Subspace(4, big.vectors()[: data.draw(st.integers(0, big.dim))])
    c = complement(big, small)
    assert c.cols == big.dim - small.dim
    assert subspace_sum(small, Subspace.span_columns(c)) == big if c.cols else small == big


# -- Vandermonde splitting ---------------------------------------------------------

def test_vandermonde_examples():
    u = (GaussianRational(1), GaussianRational(2))
    assert solve_vandermonde([I], [u]) == [u]
    L = Matrix.diagonal([I, -I])
    comps = eigen_components(L, [I, -I], (1, 1))
    assert comps == [(1, 0), (0, 1)]
    with pytest.raises(SingularMatrixError):
        solve_vandermonde([1, 1], [u, u])


@given(st.lists(scalars, min_size=3, max_size=3), st.lists(scalars, min_size=3, max_size=3))
def test_vandermonde_components_are_eigenvectors(diag, u):
    L = Matrix.diagonal(diag)
    betas = sorted(set(diag), key=str)
    comps = eigen_components(L, betas, u)
    assert tuple(sum(c, GaussianRational(0)) for c in zip(*comps)) == tuple(u)
    for b, v in zip(betas, comps):
        assert L.apply(v) == tuple(b * x for x in v)
