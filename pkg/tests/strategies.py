"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from heckeann.rings import LaurentPoly

small_ints = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def laurent_polys(draw, max_len=9, min_exp=-4, max_exp=4):
    coeffs = draw(st.lists(small_ints, max_size=max_len))
    return LaurentPoly(coeffs, draw(st.integers(min_exp, max_exp)))


@st.composite
def nonzero_laurent(draw, max_len=5):
    p = draw(laurent_polys(max_len=max_len))
    return p if p else LaurentPoly.one()
