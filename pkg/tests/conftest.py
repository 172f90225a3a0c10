from fractions import Fraction

from hypothesis import strategies as st

from conehelly.ratlin import VectorSet


def small_fraction(max_num=5, max_den=3):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


@st.composite
def int_vector_sets(draw, max_d=4, max_n=6, bound=3, min_n=0, nonzero=False):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(min_n, max_n))
    coord = st.integers(-bound, bound)
    vectors = []
    for _ in range(n):
        v = tuple(Fraction(draw(coord)) for _ in range(d))
        if nonzero and all(c == 0 for c in v):
            v = v[:-1] + (Fraction(1),)
        vectors.append(v)
    return VectorSet(d, tuple(vectors))


@st.composite
def rational_matrices(draw, max_rows=4, max_cols=4):
    nrows = draw(st.integers(0, max_rows))
    ncols = draw(st.integers(1, max_cols))
    rows = tuple(
        tuple(draw(small_fraction()) for _ in range(ncols))
        for _ in range(nrows)
    )
    return rows, ncols
