from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cubic_coordination import lattice, zeros
from cubic_coordination.errors import CommonRoot, DegreeMismatch
from cubic_coordination.exact import ExactPolynomial


def test_rows_are_skew_diagonals():
    for kind, m in (("s", 0), ("d", 1), ("c", 2)):
        for n in range(12):
            p = zeros.family_poly(kind, n)
            assert list(p.coeffs) == [lattice.lattice_number(m, n - k, k) for k in range(n + 1)]


def test_small_rows():
    assert zeros.family_poly("c", 1) == ExactPolynomial([2, 1])
    assert zeros.family_poly("d", 2) == ExactPolynomial([1, 3, 1])
    assert zeros.family_poly("ell", 2, m=3) == zeros.family_poly("ell", 2, 3)
    with pytest.raises(ValueError):
        zeros.family_poly("ell", 2)


@pytest.mark.parametrize("kind", ["c", "d"])
@pytest.mark.parametrize("n", [1, 2, 3, 7, 20])
def test_certificate_against_numeric_roots(kind, n):
    cert = zeros.check_real_rooted_and_interval(kind, n)
    assert cert.passed
    coeffs = [float(c) for c in reversed(zeros.family_poly(kind, n).coeffs)]
    numeric = sorted(float(r.real) for r in mpmath.polyroots(coeffs, maxsteps=200, extraprec=200))
    for r, iv in zip(numeric, cert.enclosures):
        assert float(iv.lo) - 1e-9 <= r <= float(iv.hi) + 1e-9
        assert r * r + 6 * r + 1 < 0


def test_ell_family_for_larger_m_leaves_interval():
    # for m = 5 some zero escapes to the left of -3 - 2 sqrt 2 once n is moderate
    certs = [zeros.check_real_rooted_and_interval("ell", n, 5) for n in range(1, 8)]
    assert all(c.real_rooted for c in certs)
    assert not all(c.inside_interval for c in certs)


def test_interlacing_verdicts():
    c, d = (lambda n: zeros.family_poly("c", n)), (lambda n: zeros.family_poly("d", n))
    for n in range(2, 25):
        assert zeros.check_interlacing(c(n - 1), c(n)) == zeros.INTERLACES
        assert zeros.check_interlacing(d(n - 1), d(n)) == zeros.INTERLACES
        assert zeros.check_interlacing(d(n - 1), c(n)) == zeros.INTERLACES
        assert zeros.check_interlacing(c(n), d(n)) == zeros.ALTERNATES_LEFT


def test_interlacing_counterexamples():
    p = ExactPolynomial(oracles.poly_from_roots([Fraction(-1), Fraction(-2)]))
    q = ExactPolynomial(oracles.poly_from_roots([Fraction(-3), Fraction(-4), Fraction(-5)]))
    assert zeros.check_interlacing(p, q) == zeros.NEITHER
    # reversed order of the same-degree pair does not alternate to the left
    c, d = zeros.family_poly("c", 5), zeros.family_poly("d", 5)
    assert zeros.check_interlacing(d, c) == zeros.NEITHER


def test_interlacing_errors():
    with pytest.raises(DegreeMismatch):
        zeros.check_interlacing(zeros.family_poly("c", 2), zeros.family_poly("c", 5))
    p = ExactPolynomial(oracles.poly_from_roots([-1, -2]))
    q = ExactPolynomial(oracles.poly_from_roots([-1, -3, -4]))
    with pytest.raises(CommonRoot):
        zeros.check_interlacing(p, q)


@given(st.lists(st.fractions(-10, -Fraction(1, 8), max_denominator=8), min_size=3, max_size=3, unique=True))
@settings(max_examples=40, deadline=None)
def test_interlacing_with_constructed_roots(rs):
    rs = sorted(rs)
    between = [(rs[0] + rs[1]) / 2, (rs[1] + rs[2]) / 2]
    p = ExactPolynomial(oracles.poly_from_roots(between))
    q = ExactPolynomial(oracles.poly_from_roots(rs))
    assert zeros.check_interlacing(p, q) == zeros.INTERLACES


@pytest.mark.parametrize("n", [1, 2, 5, 12, 20])
def test_delannoy_zero_formula(n):
    rep = zeros.verify_delannoy_zero_formula(n)
    assert rep.passed
    assert len(rep.rows) == n


def test_delannoy_zero_formula_at_n_2_is_golden():
    with mpmath.workdps(40):
        assert mpmath.almosteq(zeros.delannoy_zero(2, 1), -(3 - mpmath.sqrt(5)) / 2, 1e-35)


def test_density_improves():
    small, large = zeros.empirical_zero_density(5), zeros.empirical_zero_density(50)
    assert large.max_gap < small.max_gap
    assert small.all_inside and large.all_inside
    assert large.pooled == 50 * 51 // 2
    with pytest.raises(ValueError):
        zeros.empirical_zero_density(1)


def test_left_escape_table():
    assert zeros.first_left_escape(6, 3).first_n == 1  # x + 6 has its zero at -6
    assert zeros.first_left_escape(5, 5).first_n == 2
    assert zeros.first_left_escape(4, 10).first_n == 5
    assert zeros.first_left_escape(2, 20).first_n is None
