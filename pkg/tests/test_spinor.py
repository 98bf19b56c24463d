from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from bottchern.exact import I, GaussianRational, Matrix, Subspace
from bottchern.flat import t2_structures, t4_model
from bottchern.spinor import (
    HodgeStarError,
    StructureError,
    canonical_line,
    chevalley_pairing,
    clifford_act,
    clifford_matrix,
    grading_operator,
    hodge_star,
    hodge_star_from_frame,
    i_eigenbundle,
    joint_grading,
    natural_pairing,
    pairing_matrix,
    sigma,
    spin_operator,
    spinor_space,
    tilde_sigma,
    u_grading,
    vandermonde_joint_grading,
    wedge,
)

from conftest import scalars

S1, S2 = spinor_space(1), spinor_space(2)
J1_T2, J2_T2 = t2_structures(0, 1, -1, 0, 1, -1)
T4 = t4_model()
SWAP1 = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])

# generalized vectors on R^2: (d/dx, d/dy, dx, dy)
DX_, DY_, dx_, dy_ = ([1 if i == j else 0 for i in range(4)] for j in range(4))


def form1(terms):
    return S1.form(terms)


def add(u, v):
    return [a + b for a, b in zip(u, v)]


# -- Clifford action ----------------------------------------------------------------

def test_basis_order():
    assert S1.basis == ((), (0,), (1,), (0, 1))
    assert S2.dim == 16 and S2.degrees == (0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4)


def test_clifford_definition_cases():
    one = form1({(): 1})
    assert not any(clifford_act(1, DX_, one))
    assert clifford_act(1, dx_, one) == form1({(0,): 1})
    assert clifford_act(1, add(DY_, dy_), form1({(0,): 1})) == form1({(0, 1): -1})


def test_unit_vector_squares_to_identity():
    e = clifford_matrix(1, add(DX_, dx_))
    assert e @ e == Matrix.identity(4)


@given(st.lists(scalars, min_size=8, max_size=8))
def test_clifford_relation(e):
    c = clifford_matrix(2, e)
    assert c @ c == Matrix.identity(16).scale(natural_pairing(2, e, e))


@given(st.lists(scalars, min_size=8, max_size=8), st.lists(scalars, min_size=8, max_size=8))
def test_clifford_anticommutator(u, v):
    cu, cv = clifford_matrix(2, u), clifford_matrix(2, v)
    assert cu @ cv + cv @ cu == Matrix.identity(16).scale(2 * natural_pairing(2, u, v))


def test_natural_pairing_examples():
    assert natural_pairing(1, DX_, dx_) == Fraction(1, 2)
    assert natural_pairing(1, DX_, DY_) == 0
    assert natural_pairing(1, add(DX_, dx_), add(DX_, dx_)) == 1
    P = pairing_matrix(1)
    assert P == P.T


# -- forms, sigma, Chevalley pairing ----------------------------------------------------

def test_sigma_signs_by_degree():
    v = tuple(GaussianRational(1) for _ in range(S2.dim))
    signs = {S2.degrees[i]: x for i, x in enumerate(sigma(2, v))}
    assert [signs[a] for a in range(4)] == [1, 1, -1, -1]
    tsigns = {S2.degrees[i]: x for i, x in enumerate(tilde_sigma(2, v))}
    assert [tsigns[a] for a in range(4)] == [1, -1, -1, 1]


def test_chevalley_example():
    assert chevalley_pairing(1, form1({(): 1}), form1({(0, 1): 1})) == -1


@given(st.lists(scalars, min_size=16, max_size=16), st.lists(scalars, min_size=16, max_size=16))
def test_chevalley_is_minus_top_of_sigma_wedge(a, b):
    assert chevalley_pairing(2, a, b) == -wedge(2, sigma(2, a), b)[-1]


def test_wedge_is_graded_commutative():
    x, y = form1({(0,): 1}), form1({(1,): 1})
    assert wedge(1, x, y) == tuple(-c for c in wedge(1, y, x))


# -- structures and gradings ----------------------------------------------------------

def test_eigenbundles():
    assert i_eigenbundle(J2_T2).dim == 2
    L = i_eigenbundle(T4.J1)
    assert L.dim == 4
    P = pairing_matrix(2)
    for u in L.vectors():
        for v in L.vectors():
            assert sum((a * b for a, b in zip(u, P.apply(v))), GaussianRational(0)) == 0


def test_canonical_lines():
    # complex type: dx + i dy
    assert canonical_line(J2_T2) == Subspace(4, [form1({(0,): 1, (1,): I})])
    # symplectic type: 1 - i dx^dy
    assert canonical_line(J1_T2) == Subspace(4, [form1({(): 1, (0, 1): -I})])
    dz1 = S2.form({(0,): 1, (1,): I})
    dz2 = S2.form({(2,): 1, (3,): I})
    assert canonical_line(T4.J2) == Subspace(16, [wedge(2, dz1, dz2)])


def test_u_grading_dims():
    g = u_grading(J2_T2)
    assert g.dims() == {-1: 1, 0: 2, 1: 1}
    assert g[1] == canonical_line(J2_T2)
    assert g[0] == Subspace(4, [form1({(): 1}), form1({(0, 1): 1})])
    for J in (T4.J1, T4.J2):
        dims = u_grading(J).dims()
        assert [dims[p] for p in range(-2, 3)] == [comb(4, 2 - p) for p in range(-2, 3)]
    assert u_grading(T4.J2).dims()[0] == 6


def test_joint_grading_dims():
    g = joint_grading(J1_T2, J2_T2)
    assert g.nonzero().keys() == {(0, 1), (0, -1), (1, 0), (-1, 0)}
    assert all(s.dim == 1 for s in g.nonzero().values())
    d = joint_grading(T4.J1, T4.J2).nonzero()
    expected = {(0, 0): 4, (2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1}
    expected.update({(a, b): 2 for a in (1, -1) for b in (1, -1)})
    assert {k: v.dim for k, v in d.items()} == expected


@pytest.mark.parametrize("pair", [(J1_T2, J2_T2), (T4.J1, T4.J2)])
def test_grading_completeness_and_vandermonde(pair):
    g = joint_grading(*pair)
    n = pair[0].rows // 4
    assert sum(g.dims().values()) == 4 ** n and g.is_direct()
    assert g.nonzero() == vandermonde_joint_grading(*pair).nonzero()


def test_self_pairing():
    g = joint_grading(J2_T2, J2_T2).nonzero()
    u = u_grading(J2_T2)
    assert all(p == q for p, q in g)
    assert all(g[(p, p)] == u[p] for p, _ in g)


def test_non_commuting_rejected():
    Ja, _ = t2_structures(0, 1, -1, 0, 1, -1)
    Jb, _ = t2_structures(1, 1, -2, 0, 1, -1)
    assert Ja @ Jb != Jb @ Ja
    with pytest.raises(StructureError):
        joint_grading(Ja, Jb)


def test_non_structure_rejected():
    with pytest.raises(StructureError):
        u_grading(Matrix.identity(4))


@pytest.mark.parametrize("J", [J1_T2, J2_T2, T4.J1, T4.J2])
def test_spin_operator_acts_by_ip(J):
    assert spin_operator(J) == grading_operator(u_grading(J))


# -- Hodge star ---------------------------------------------------------------------

def test_star_of_one():
    star = hodge_star(SWAP1)
    assert star.apply(form1({(): 1})) == form1({(0, 1): 1})
    assert star @ star == -Matrix.identity(4)


def test_star_squares_on_t4():
    star = hodge_star(T4.G)
    assert star.shape == (16, 16) and star.is_real()
    assert star @ star == Matrix.identity(16)


def test_star_is_frame_independent():
    # rotate the frame (d/dx + dx, d/dy + dy) by the rational rotation (3/5, 4/5)
    c, s = Fraction(3, 5), Fraction(4, 5)
    e1, e2 = add(DX_, dx_), add(DY_, dy_)
    f1 = [c * a + s * b for a, b in zip(e1, e2)]
    f2 = [-s * a + c * b for a, b in zip(e1, e2)]
    assert hodge_star_from_frame(1, [f1, f2]) == hodge_star(SWAP1)


def test_irrational_normalization_is_an_error():
    # metric diag(2, 1): norms 2 and 1 multiply to 2
    g = Matrix([[0, 0, Fraction(1, 2), 0], [0, 0, 0, 1], [2, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(HodgeStarError, match="irrational"):
        hodge_star(g)


def test_non_positive_metric_is_an_error():
    with pytest.raises(HodgeStarError):
        hodge_star(-SWAP1)
