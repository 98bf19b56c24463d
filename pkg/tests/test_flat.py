import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bottchern.exact import I, Matrix, Subspace, image_basis, kernel_basis, subspace_intersection
from bottchern.flat import (
    COMPONENTS,
    LAPLACIAN_PAIRS,
    PAIRS,
    FlatBiGcModel,
    ModelParseError,
    ModelValidationError,
    adjoint_of,
    bidegree_of_slice,
    check_adjoint_formulas,
    delta_components,
    diamond_csv,
    diamond_text,
    geometry,
    harmonic_decomposition,
    hodge_inner_product,
    is_point_symmetric,
    laplacians,
    metric_search,
    mode_cohomology,
    mode_operator,
    pde_slice_check,
    reindex_to_double_complex,
    slice_of_bidegree,
    t2_model,
    t4_model,
    torus_cohomology,
    validate_model,
)
from bottchern.spinor import pairing_matrix, spinor_space

from conftest import scalars

T2, T4 = t2_model(), t4_model()
T2_TABLE = {(0, 1): 1, (1, 0): 1, (0, -1): 1, (-1, 0): 1}
T4_TABLE = {(-2, 0): 1, (2, 0): 1, (0, -2): 1, (0, 2): 1, (0, 0): 4, (1, 1): 2, (1, -1): 2, (-1, 1): 2, (-1, -1): 2}
modes2 = st.tuples(*[st.integers(-3, 3)] * 2)
modes4 = st.tuples(*[st.integers(-2, 2)] * 4)


def nonzero(d):
    return {k: v for k, v in d.items() if v}


def to_numpy(m: Matrix) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in m.row_list()])


# -- models ----------------------------------------------------------------------

def test_builtin_models_validate():
    assert validate_model(T2) == []
    assert validate_model(T4) == []
    assert T2.is_generalized_kahler()


def test_t4_metric_is_swap_and_not_minus_j1j2():
    assert T4.G @ T4.G == Matrix.identity(8)
    assert not T4.is_generalized_kahler()
    # -J1 J2 is not even a positive form
    assert np.linalg.eigvalsh(to_numpy(pairing_matrix(2) @ -(T4.J1 @ T4.J2)).real).min() < 0


def test_invalid_structure_is_named():
    bad = validate_model(t2_model(a=1, b=0, c=0))
    assert "J1^2 = -I" in [v.identity for v in bad]
    with pytest.raises(ModelValidationError):
        t2_model(a=1, b=0, c=0).require_valid()


def test_metric_exists_with_both_parameters_nonzero():
    # a = p = 1 and b = q = 1, c = r = -2: -J1 J2 is a generalized metric
    m = t2_model(1, 1, -2, 1, 1, -2)
    assert validate_model(m) == []
    PG = to_numpy(pairing_matrix(1) @ m.G).real
    assert np.allclose(PG, PG.T) and np.linalg.eigvalsh(PG).min() > 0
    assert metric_search(m.J1, m.J2).evidence_of_metric


def test_metric_search_on_standard_pair():
    found = metric_search(T2.J1, T2.J2)
    assert found.metric is not None and found.commutant_dim >= 1


def test_model_json_round_trip():
    doc = T4.to_json()
    assert FlatBiGcModel.from_json(json.dumps(doc)) == T4
    doc = T2.to_json()
    doc["G"] = "auto:-J1J2"
    assert FlatBiGcModel.from_json(doc).G == T2.G


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("J1"),
    lambda d: d.update(n=0),
    lambda d: d.update(G="auto:J1J2"),
    lambda d: d.update(J1=[[0, 1], [1, 0]]),
    lambda d: d.update(J1=[[1.5] * 4] * 4),
    lambda d: d.update(label=3),
])
def test_model_parse_errors(mutate):
    doc = T2.to_json()
    mutate(doc)
    with pytest.raises(ModelParseError):
        FlatBiGcModel.from_json(doc)


# -- mode operators --------------------------------------------------------------------

def test_mode_operator():
    S = spinor_space(1)
    assert mode_operator(T2, (0, 0)).is_zero()
    assert mode_operator(T2, (1, 0)) == S.wedge_matrix(0).scale(I)
    with pytest.raises(ValueError):
        mode_operator(T2, (1, 0, 0))


def test_components_at_zero_vanish():
    mc = delta_components(T4, (0, 0, 0, 0))
    assert all(mc[name].is_zero() for name in COMPONENTS)


def test_component_block_for_t2():
    mc = delta_components(T2, (1, 0))
    assert not mc.block("delta_plus", 0, -1).is_zero()
    assert sum((mc[n] for n in COMPONENTS), Matrix.zeros(4, 4)) == mc.d
    assert geometry(T2).to_spinor(mc.d) == mode_operator(T2, (1, 0))


@given(modes4)
@settings(max_examples=10)
def test_component_sum_on_t4(k):
    mc = delta_components(T4, k)
    assert geometry(T4).to_spinor(sum((mc[n] for n in COMPONENTS), Matrix.zeros(16, 16))) == mode_operator(T4, k)


@pytest.mark.parametrize("pair", list(PAIRS))
@pytest.mark.parametrize("n", [1, 2])
def test_slice_reindexing_round_trip(pair, n):
    for a in range(-3, 4):
        for b in range(-3, 4):
            assert bidegree_of_slice(pair, n, *slice_of_bidegree(pair, n, a, b)) == (a, b)


@pytest.mark.parametrize("pair", list(PAIRS))
def test_reindexed_complexes_validate(pair):
    for model, k in ((T2, (1, -2)), (T4, (1, 0, -1, 2))):
        assert reindex_to_double_complex(delta_components(model, k), pair).is_valid()


def test_reindex_at_zero_mode():
    g = geometry(T4)
    dims = mode_cohomology(T4, (0, 0, 0, 0), "pp", ("bc",))["bc"]
    assert dims == g.dims()


def test_t2_nonzero_mode_is_exact():
    assert not any(mode_cohomology(T2, (1, 0), "pp", ("bc",))["bc"].values())


def _partial_cohomology(model, k):
    """``∂1`` cohomology per grading ``p``, straight from kernels and images."""
    g = geometry(model)
    op = delta_components(model, k).partial1
    out = {}
    for p in sorted({key[0] for key in g.keys}):
        U = Subspace(g.dim, [v for key in g.keys if key[0] == p for v in g.slice_columns(key)])
        out[p] = subspace_intersection(U, kernel_basis(op)).dim - subspace_intersection(U, image_basis(op)).dim
    return out


@pytest.mark.parametrize("model,k", [(T2, (0, 0)), (T2, (2, -1)), (T4, (0, 0, 0, 0)), (T4, (0, 1, 0, 0))])
def test_pp_total_complex_computes_partial1_cohomology(model, k):
    assert mode_cohomology(model, k, "pp", ("derham",))["derham"] == _partial_cohomology(model, k)


# -- Hodge form and adjoints ----------------------------------------------------------------

def test_hodge_form_on_t2():
    h = hodge_inner_product(T2)
    one = spinor_space(1).form({(): 1})
    assert h.value(one, one) == 1
    g = geometry(T2)
    blk = g.block(h.positive, (0, 1), (0, 1))
    assert all(blk[i, i].real > 0 for i in range(blk.rows))


@given(st.lists(scalars, min_size=16, max_size=16), st.lists(scalars, min_size=16, max_size=16))
@settings(max_examples=15)
def test_hodge_form_is_hermitian(a, b):
    h = hodge_inner_product(T4)
    assert h.value(a, b) == h.value(b, a).conjugate()
    if any(a):
        assert h.value(a, a).real > 0 and h.value(a, a).imag == 0


def test_adjoint_basics():
    H = hodge_inner_product(T4).positive
    eye = Matrix.identity(16)
    assert adjoint_of(eye, H) == eye
    assert adjoint_of(Matrix.zeros(16, 16), H).is_zero()
    d = delta_components(T4, (1, 2, 0, -1))["delta_plus"]
    assert adjoint_of(adjoint_of(d, H), H) == d


@given(st.lists(scalars, min_size=4, max_size=4), st.lists(scalars, min_size=4, max_size=4), modes2)
@settings(max_examples=15)
def test_adjoint_defining_identity(x, y, k):
    h = hodge_inner_product(T2)
    g = geometry(T2)
    d = delta_components(T2, k)["delta_minus"]
    dadj = adjoint_of(d, h.positive)
    a, b = g.B.apply(x), g.B.apply(y)  # slice coordinates -> forms
    lhs = h.value(g.B.apply(d.apply(x)), b)
    rhs = h.value(a, g.B.apply(dadj.apply(y)))
    assert lhs == rhs


def test_adjoint_formulas_at_zero_mode():
    chk = check_adjoint_formulas(T2, (0, 0))
    assert all(chk.inverse_star.values()) and all(chk.star_star.values()) and all(chk.forms_coincide.values())


def test_adjoint_formulas_on_t2():
    chk = check_adjoint_formulas(T2, (1, 0))
    assert chk.validated == "inverse_star"
    assert not any(chk.star_star.values())
    assert set(chk.positive_sign.values()) == {-1}


def test_adjoint_formulas_on_t4():
    chk = check_adjoint_formulas(T4, (1, 0, 0, 0))
    # -star^-1 d star matches, as on T2, but the star squares to +1 here so both forms agree
    assert all(chk.inverse_star.values())
    assert all(chk.forms_coincide.values())
    assert chk.validated is None


# -- Laplacians and harmonic forms -------------------------------------------------------------

def test_laplacians_vanish_at_zero():
    lap = laplacians(T2, (0, 0))
    assert lap.d.is_zero() and all(m.is_zero() for m in lap.delta.values())
    assert all(m.is_zero() for m in lap.pairs.values())


@pytest.mark.parametrize("k", [(1, 0, 0, 0), (1, -1, 2, 0), (0, 2, -1, 1)])
def test_t4_laplacian_relations(k):
    lap = laplacians(T4, k)
    assert lap.d == lap.partial1.scale(2) == lap.partial2.scale(2)
    assert lap.d == lap.delta["delta_plus"].scale(4) == lap.delta["delta_minus"].scale(4)
    H = hodge_inner_product(T4).positive
    for m in (lap.d, *lap.pairs.values()):
        assert adjoint_of(m, H) == m


def test_harmonic_at_zero_mode():
    g = geometry(T4)
    for key in g.keys:
        r = harmonic_decomposition(T4, (0, 0, 0, 0), (1, 2), key)
        assert (r.harmonic_dim, r.image_dim, r.verdict) == (len(g.ranges[key]), 0, True)


def test_harmonic_on_t4_first_mode():
    for key in geometry(T4).keys:
        r = harmonic_decomposition(T4, (1, 0, 0, 0), (1, 2), key)
        assert r.verdict and r.harmonic_dim == 0


@given(modes2.filter(any))
@settings(max_examples=10)
def test_t2_nonzero_modes_have_no_harmonic_forms(k):
    for ij in LAPLACIAN_PAIRS:
        for key in geometry(T2).keys:
            r = harmonic_decomposition(T2, k, ij, key)
            assert r.verdict and r.harmonic_dim == 0


def test_harmonic_rejects_unknown_pair():
    with pytest.raises(ValueError):
        harmonic_decomposition(T2, (1, 0), (1, 4), (0, 1))


# -- torus sums ------------------------------------------------------------------------

def test_t2_table():
    r = torus_cohomology(T2, ("bc",), "pp", 2)
    assert nonzero(r.totals["bc"]) == T2_TABLE and r.complete
    assert nonzero(torus_cohomology(T2, ("bc",), "pb", 2).totals["bc"]) == T2_TABLE


def test_t4_table_and_symmetries():
    r = torus_cohomology(T4, ("bc", "dprime", "dsecond"), "pp", 1)
    assert nonzero(r.totals["bc"]) == T4_TABLE and r.complete
    assert all(is_point_symmetric(r.totals[t]) for t in r.theories)
    bb = torus_cohomology(T4, ("bc",), "bb", 1)
    assert is_point_symmetric(r.totals["bc"], bb.totals["bc"])


def test_parallel_sweep_matches_serial():
    a = torus_cohomology(T2, ("bc", "derham"), "pp", 1)
    b = torus_cohomology(T2, ("bc", "derham"), "pp", 1, workers=2)
    assert a.to_json() == b.to_json()


def test_torus_argument_checks():
    with pytest.raises(ValueError):
        torus_cohomology(T2, ("nope",))
    with pytest.raises(ValueError):
        torus_cohomology(T2, pair="xx")
    with pytest.raises(ValueError):
        torus_cohomology(T2, radius=-1)


@pytest.mark.parametrize("k,descriptor,dim", [
    ((0, 0, 0, 0), (0, -2), 1),
    ((1, 0, 0, 0), (0, -2), 0),
    ((0, 1, 0, 0), (0, 2), 0),
    ((0, 0, 0, 0), (-2, 0), 1),
])
def test_pde_examples(k, descriptor, dim):
    chk = pde_slice_check(T4, k, descriptor)
    assert chk.dim == dim and chk.agrees


def test_pde_agrees_on_random_modes():
    rng = random.Random(5)
    for _ in range(10):
        k = tuple(rng.randint(-2, 2) for _ in range(4))
        for desc in ((0, -2), (0, 2), (-2, 0)):
            assert pde_slice_check(T4, k, desc).agrees


def test_diamond_rendering():
    g = geometry(T2)
    csv_text = diamond_csv(T2_TABLE, g.dims(), 1)
    assert csv_text.splitlines() == ["p\\q,-1,0,1", "1,,1,", "0,1,,1", "-1,,1,"]
    assert diamond_text(T2_TABLE, g.dims(), 1).splitlines()[1].split("|")[1].split() == [".", "1", "."]
