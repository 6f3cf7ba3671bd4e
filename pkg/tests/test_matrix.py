from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cubic_coordination.errors import BadIndexSet, NotSquare
from cubic_coordination.exact import ExactMatrix, cauchy_binet, det_fraction_free, minor

entries = st.integers(min_value=-20, max_value=20)


@st.composite
def square(draw, max_size=6, elements=entries):
    n = draw(st.integers(min_value=1, max_value=max_size))
    return draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n))


@given(square())
def test_bareiss_matches_cofactor_expansion(rows):
    assert det_fraction_free(ExactMatrix(rows)) == oracles.cofactor_det(rows)


@given(square(max_size=4, elements=st.fractions(min_value=-3, max_value=3, max_denominator=5)))
@settings(max_examples=60)
def test_rational_determinant(rows):
    assert det_fraction_free(ExactMatrix(rows)) == oracles.cofactor_det(rows)


def test_integer_input_gives_integer():
    d = det_fraction_free(ExactMatrix([[2, 1], [1, 3]]))
    assert d == 5 and type(d) is int


def test_zero_pivot_needs_row_swap():
    assert det_fraction_free(ExactMatrix([[0, 1], [1, 0]])) == -1
    assert det_fraction_free(ExactMatrix([[0, 0], [1, 0]])) == 0


def test_det_of_nonsquare():
    with pytest.raises(NotSquare):
        det_fraction_free(ExactMatrix([[1, 2, 3], [4, 5, 6]]))


def test_minor_index_checks():
    m = ExactMatrix.identity(4)
    assert minor(m, (0, 2), (0, 2)) == 1
    with pytest.raises(BadIndexSet):
        minor(m, (2, 0), (0, 1))
    with pytest.raises(BadIndexSet):
        minor(m, (0, 4), (0, 1))
    with pytest.raises(BadIndexSet):
        minor(m, (0, 1), (0,))


@given(
    st.lists(st.lists(entries, min_size=4, max_size=4), min_size=3, max_size=3),
    st.lists(st.lists(entries, min_size=3, max_size=3), min_size=4, max_size=4),
)
@settings(max_examples=40)
def test_cauchy_binet_identity(a, b):
    A, B = ExactMatrix(a), ExactMatrix(b)
    rows, cols = (0, 2), (1, 2)
    assert cauchy_binet(A, B, rows, cols) == minor(A @ B, rows, cols)


@given(square(max_size=4), square(max_size=4))
def test_product_matches_oracle(a, b):
    n = min(len(a), len(b))
    a = [r[:n] for r in a[:n]]
    b = [r[:n] for r in b[:n]]
    assert (ExactMatrix(a) @ ExactMatrix(b)).tolist() == oracles.matmul(a, b)


def test_matrix_is_immutable_value():
    m = ExactMatrix([[1, Fraction(1, 2)], [0, 3]])
    assert m == ExactMatrix([[1, Fraction(1, 2)], [0, 3]])
    assert hash(m) == hash(ExactMatrix([[1, Fraction(1, 2)], [0, 3]]))
    assert m.transpose().transpose() == m
    assert m.is_lower_triangular() is False
    assert m.transpose().is_lower_triangular()
