import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cubic_coordination import lattice, riordan
from cubic_coordination.errors import ImproperArray, ImproperLeftFactor, InsufficientOrder
from cubic_coordination.exact import ExactMatrix, TruncatedSeries

SIZE = 8


def as_lists(M):
    return [list(r) for r in M.tolist()]


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5])
def test_square_array_matches_recurrence(m):
    assert as_lists(riordan.lattice_square(m, SIZE).window(SIZE)) == oracles.pascal_like_table(m, SIZE, SIZE)


@pytest.mark.parametrize("m", [0, 1, 2, 4])
def test_triangle_is_skewed_square(m):
    T = riordan.lattice_triangle(m, SIZE).window(SIZE)
    table = oracles.pascal_like_table(m, SIZE, SIZE)
    for n in range(SIZE):
        for k in range(SIZE):
            assert T[n, k] == (table[n - k][k] if k <= n else 0)


def test_c_hat_leading_rows():
    W = riordan.c_triangle(5).window(5)
    assert [[W[n, k] for k in range(n + 1)] for n in range(5)] == [
        [1],
        [2, 1],
        [2, 4, 1],
        [2, 8, 6, 1],
        [2, 12, 18, 8, 1],
    ]


def test_c_hat_inverse_rows_and_closed_form():
    inv = riordan.c_triangle(12).inverse()
    W = inv.window(5)
    assert [W[n, 0] for n in range(5)] == [1, -2, 6, -22, 90]
    assert inv.window(12) == riordan.c_triangle_inverse_closed_form(12).window(12)


def test_pascal_inverse_is_signed_pascal():
    W = riordan.pascal_triangle(SIZE).inverse().window(SIZE)
    P = riordan.pascal_triangle(SIZE).window(SIZE)
    assert all(W[n, k] == (-1) ** (n - k) * P[n, k] for n in range(SIZE) for k in range(SIZE))


proper_f = st.lists(st.integers(-3, 3), min_size=SIZE - 1, max_size=SIZE - 1).map(
    lambda t: TruncatedSeries([0, 1] + t, SIZE)
)
any_g = st.lists(st.integers(-3, 3), min_size=SIZE, max_size=SIZE).map(lambda t: TruncatedSeries([1] + t, SIZE))


@given(any_g, proper_f, any_g, proper_f)
@settings(max_examples=30, deadline=None)
def test_product_is_matrix_product(g1, f1, g2, f2):
    A = riordan.RiordanArray(g1, f1)
    B = riordan.RiordanArray(g2, f2)
    n = SIZE + 1
    assert (A @ B).window(n) == A.window(n) @ B.window(n)


@given(any_g, proper_f)
@settings(max_examples=30, deadline=None)
def test_inverse_is_two_sided(g, f):
    A = riordan.RiordanArray(g, f)
    I = ExactMatrix.identity(SIZE + 1)
    assert (A @ A.inverse()).window(SIZE + 1) == I
    assert A.inverse().window(SIZE + 1) @ A.window(SIZE + 1) == I


def test_square_arrays_are_not_group_elements():
    with pytest.raises(ImproperLeftFactor):
        riordan.C_matrix(6) @ riordan.c_triangle(6)
    with pytest.raises(ImproperArray):
        riordan.S_matrix(6).inverse()
    with pytest.raises(ImproperArray):
        riordan.extract_production(riordan.D_matrix(6))


def test_window_needs_enough_order():
    with pytest.raises(InsufficientOrder):
        riordan.c_triangle(4).window(6)


def test_j_times_s_hat_is_d_hat():
    J = riordan.J_matrix(SIZE)
    assert (J @ riordan.s_triangle(SIZE)).window(SIZE) == riordan.d_triangle(SIZE).window(SIZE)


def test_production_sequences_of_c_hat():
    data = riordan.extract_production(riordan.c_triangle(12))
    assert list(data.A.coeffs[:8]) == [1, 2, -2, 6, -22, 90, -394, 1806]
    assert list(data.Z.coeffs[:8]) == [2, -2, 6, -22, 90, -394, 1806, -8558]


@pytest.mark.parametrize("name", ["c-hat", "d-hat", "s-hat", "p-hat", "L_C"])
def test_row_replay_rebuilds_array(name):
    R = riordan.NAMED[name](14)
    assert riordan.replay_rows(riordan.extract_production(R), 11) == R.window(11)


def test_production_matrix_reproduces_shifted_rows():
    R = riordan.c_triangle(12)
    P = riordan.extract_production(R).production_matrix(8)
    W = R.window(9)
    upper = W.window(8, 8)
    lower = ExactMatrix.from_function(8, 8, lambda i, j: W[i + 1, j])
    assert upper @ P == lower


@pytest.mark.parametrize("name", ["S", "C", "D", "c-hat", "d-hat"])
def test_left_product_decomposition(name):
    R = riordan.NAMED[name](10)
    left, right = riordan.left_product_decompose(R, 6)
    assert left.shape == (6, 7) and right.shape == (7, 6)
    assert left @ right == R.window(6)


@pytest.mark.parametrize("name", ["S", "C"])
def test_ldu_factorisation(name):
    L, D, U = riordan.ldu_factors(name, SIZE)
    assert L @ D @ U == riordan.NAMED[name](SIZE).window(SIZE)
    assert L.is_lower_triangular() and U.transpose().is_lower_triangular()


def test_ldu_unknown_matrix():
    with pytest.raises(ValueError):
        riordan.ldu_factors("D", 4)


def test_determinant_of_s_windows():
    S = riordan.S_matrix(10)
    for n in range(8):
        assert S.window(n + 1).det() == 2 ** (n * (n + 1) // 2)


def test_schroder_series_against_path_count():
    assert list(riordan.schroder_series(10).coeffs) == oracles.large_schroder(10)


def test_riordan_and_lattice_agree():
    C = riordan.C_matrix(10).window(10)
    assert all(C[n, k] == lattice.C(n, k) for n in range(10) for k in range(10))
