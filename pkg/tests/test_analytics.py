from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from cubic_coordination import analytics, lattice
from cubic_coordination.errors import NegativeCoefficient, NotSquare
from cubic_coordination.exact import ExactMatrix
from cubic_coordination.zeros import family_poly


def test_stats_of_binomial_row():
    s = analytics.coeff_stats([comb(6, k) for k in range(7)])
    assert s.mean == 3 and s.variance == Fraction(3, 2) and s.modes == (3,)


@given(st.lists(st.integers(0, 50), min_size=1, max_size=12).filter(any))
def test_stats_match_direct_moments(a):
    s = analytics.coeff_stats(a)
    total = sum(a)
    mean = Fraction(sum(k * v for k, v in enumerate(a)), total)
    var = Fraction(sum((k - mean) ** 2 * v for k, v in enumerate(a)), total)
    assert s.mean == mean and s.variance == var


def test_negative_coefficients_rejected():
    with pytest.raises(NegativeCoefficient):
        analytics.coeff_stats([1, -1, 2])
    with pytest.raises(NegativeCoefficient):
        analytics.check_logconcave_unimodal([1, -1])


def test_logconcavity_detects_dip():
    rep = analytics.check_logconcave_unimodal([1, 1, 2])
    assert rep.unimodal and not rep.logconcave
    assert analytics.check_logconcave_unimodal([2, 1, 2]).unimodal is False


def test_c_rows_have_single_central_mode():
    for n in range(1, 60):
        rep = analytics.check_logconcave_unimodal(family_poly("c", n).coeffs, real_rooted=True)
        assert rep.modes == (n // 2,)
        assert rep.logconcave and rep.newton and rep.darroch


def test_newton_fails_for_non_real_rooted():
    # 1 + x + x^2 has complex zeros and violates Newton at k = 1
    assert not analytics.newton_inequalities([1, 1, 1])


@pytest.mark.parametrize("kind", ["D", "S", "C"])
def test_logconvexity_hypotheses(kind):
    rep = analytics.check_logconvex_3term(kind, 60)
    assert rep.passed and rep.first_failure is None


def test_variance_and_drift_formulas():
    s = analytics.coeff_stats(family_poly("c", 1))
    assert s.mean == Fraction(1, 3) and s.variance == Fraction(2, 9)
    assert analytics.mean_drift(40) < analytics.mean_drift(20) < analytics.mean_drift(10)


def test_rational_bracket_of_limit_interval():
    assert analytics.brackets_limit_interval(Fraction(1, 6), 6)
    assert not analytics.brackets_limit_interval(Fraction(1, 5), 6)
    assert not analytics.brackets_limit_interval(Fraction(1, 6), Fraction(58, 10))


def test_normality_errors_shrink():
    a, b = analytics.normality_report("c", 20), analytics.normality_report("c", 60)
    assert 0 < b.clt_sup_error < a.clt_sup_error < 0.5
    assert 0 < b.llt_sup_error < a.llt_sup_error


def test_normality_for_binomial_row_is_small():
    # the d-row of a symmetric family should still give sane numbers
    r = analytics.normality_report("d", 40)
    assert r.clt_sup_error < 0.1 and r.llt_sup_error < 0.1


@pytest.mark.parametrize("kind", ["delta", "delta_bar", "epsilon"])
def test_hankel_closed_forms(kind):
    suite = analytics.hankel_suite(kind, 8)
    assert suite.closed_form_ok
    seq = analytics.hankel_sequence(kind, 9)
    assert [suite.determinants[n] for n in range(5)] == [oracles.hankel_det(seq, n) for n in range(5)]


def test_hankel_small_values():
    assert analytics.hankel_suite("delta", 2).determinants[2] == 32
    assert analytics.hankel_sequence("epsilon", 4) == [1, 1, 3, 13]


def test_sm_verdicts():
    assert analytics.check_sm("S", 8).sm_consistent
    assert analytics.check_sm("D", 8).sm_consistent
    rep = analytics.check_sm("C", 8)
    assert not rep.sm_consistent and rep.witness == (2, "h", -4)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=5, max_size=5), min_size=5, max_size=5))
def test_desnanot_jacobi_on_random_matrices(rows):
    assert analytics.desnanot_jacobi_check(ExactMatrix(rows))


def test_desnanot_jacobi_input():
    with pytest.raises(NotSquare):
        analytics.desnanot_jacobi_check(ExactMatrix([[1, 2, 3]]))


def test_telescoping_identity():
    assert all(analytics.telescoping_identity(n) for n in range(2, 9))


def test_columns_and_rows_of_c():
    # column 2 of C is column 3 of S since C(n, k) = S(n, k + 1)
    rep = analytics.check_column_row_logconcavity(2, 12)
    assert rep.column[:5] == (1, 6, 18, 38, 66)
    assert rep.column == tuple(lattice.S(n, 3) for n in range(12))
    assert rep.row[:4] == (2, 8, 18, 32)
    assert rep.passed


@pytest.mark.parametrize("index", [1, 3, 6, 10])
def test_row_generating_function(index):
    assert analytics.check_column_row_logconcavity(index, 20).row_matches_gf
