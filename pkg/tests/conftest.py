from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropical_tp import NEG_INF, TropMatrix, WeightMatrix


def M(rows):
    return TropMatrix.from_rows(rows)


def Wm(rows):
    return WeightMatrix.from_rows(rows)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
trop_scalars = st.one_of(rationals, st.just(NEG_INF))


def square(n, elements=rationals):
    return st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)


@st.composite
def trop_matrices(draw, min_n=1, max_n=4, elements=rationals):
    n = draw(st.integers(min_n, max_n))
    return TropMatrix.from_rows(draw(square(n, elements)))


@st.composite
def weight_matrices(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return WeightMatrix.from_rows(draw(square(n)))


@pytest.fixture
def boundary_matrix():
    """[[1,3],[4,6]]: the small two-source network with its top arc at 6."""
    return M([[1, 3], [4, 6]])


__all__ = ["M", "Wm", "Fraction"]
