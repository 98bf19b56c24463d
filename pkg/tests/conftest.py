from fractions import Fraction

from hypothesis import settings, strategies as st

from bottchern.exact import GaussianRational, Matrix

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small = st.integers(-4, 4)
fracs = st.builds(Fraction, small, st.integers(1, 3))
scalars = st.builds(GaussianRational, fracs, fracs)
ints_only = st.builds(GaussianRational, small, st.just(0))


@st.composite
def matrices(draw, rows=None, cols=None, elements=scalars):
    r = draw(st.integers(0, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    return Matrix([[draw(elements) for _ in range(c)] for _ in range(r)]) if r else Matrix.zeros(0, c)


@st.composite
def vectors(draw, dim, count=None, elements=scalars):
    k = draw(st.integers(0, dim + 1)) if count is None else count
    return [tuple(draw(elements) for _ in range(dim)) for _ in range(k)]
