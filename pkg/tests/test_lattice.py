import threading
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from cubic_coordination import lattice
from cubic_coordination.errors import DegenerateRecurrence


@pytest.mark.parametrize("n,k", [(n, k) for n in range(5) for k in range(4)])
def test_spheres_and_balls_by_enumeration(n, k):
    # S(n, k) counts points of Z^k at l1-distance n, D(n, k) those within distance n
    assert lattice.S(n, k) == oracles.lattice_points_on_sphere(n, k)
    assert lattice.D(n, k) == oracles.lattice_points_in_ball(n, k)
    assert lattice.C(n, k) == oracles.lattice_points_on_sphere(n, k + 1)


def test_known_table_entries():
    assert lattice.S(2, 3) == 18
    assert lattice.S(3, 3) == 38
    assert lattice.S(4, 3) == 66
    assert lattice.D(2, 2) == 13
    assert lattice.D(4, 4) == 321


@pytest.mark.parametrize("m", [0, 1, 2, 3, 7])
def test_family_matches_recurrence_oracle(m):
    assert lattice.family(m).table(9, 9) == oracles.pascal_like_table(m, 9, 9)


def test_negative_index_is_zero():
    assert lattice.S(-1, 2) == 0 and lattice.D(3, -1) == 0


@given(st.integers(0, 15), st.integers(0, 15))
def test_closed_forms(n, k):
    assert lattice.closed_form_S(n, k) == lattice.S(n, k)
    assert lattice.closed_form_D(n, k) == lattice.D(n, k)
    assert lattice.closed_form_D(n, k, "binomshift") == lattice.D(n, k)


def test_closed_form_variant_check():
    assert lattice.closed_form_D(6, 5) == lattice.closed_form_D(6, 5, "binomshift") == 3653
    with pytest.raises(ValueError):
        lattice.closed_form_D(1, 1, "nope")


def test_concurrent_growth_is_consistent():
    fam = lattice.LatticeFamily(2)
    results = []

    def worker(n):
        results.append((n, fam(n, n)))

    threads = [threading.Thread(target=worker, args=(n,)) for n in range(30, 0, -1)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(v == lattice.C(n, n) for n, v in results)


N = 30
EXPECTED = {
    "D": [1, 3, 13, 63, 321],
    "S": [1, 2, 8, 38, 192],
    "C": [1, 4, 18, 88, 450],
    "Schroder": [1, 2, 6, 22, 90],
}


@pytest.mark.parametrize("kind", lattice.KINDS)
def test_central_sequences_three_ways(kind):
    rec = list(lattice.diagonal(kind, N).values)
    assert rec[:5] == EXPECTED[kind]
    assert rec == lattice.gf_expand(kind, N)
    if kind in lattice.JACOBI_PARAMS:
        assert rec == lattice.central_by_jacobi(kind, N)
    else:
        assert rec == lattice.schroder_by_recurrence(N)


@pytest.mark.parametrize("kind,m", [("S", 0), ("D", 1), ("C", 2)])
def test_central_sequence_is_diagonal(kind, m):
    z = lattice.diagonal(kind, N).values
    assert all(z[n] == lattice.lattice_number(m, n, n) for n in range(N + 1))


def test_central_identities():
    D = lattice.diagonal("D", N).values
    S = lattice.diagonal("S", N).values
    C = lattice.diagonal("C", N).values
    r = lattice.diagonal("Schroder", N).values
    assert all(2 * S[n] == D[n] + D[n - 1] for n in range(1, N + 1))
    assert all(C[n] == (n + 1) * r[n] for n in range(N + 1))
    assert all(D[n] == oracles.central_delannoy(n) for n in range(N + 1))


@pytest.mark.parametrize("kind", ["D", "S", "C"])
def test_jacobi_recurrence_matches_sum(kind):
    params = lattice.JACOBI_PARAMS[kind]
    assert [lattice.jacobi_recurrence(params, n) for n in range(25)] == lattice.central_by_jacobi(kind, 24)


def test_jacobi_recurrence_degenerate_parameters():
    with pytest.raises(DegenerateRecurrence):
        lattice.jacobi_recurrence(lattice.JacobiParams(-1, -1, 3), 3)


def test_legendre_values():
    p = lattice.JacobiParams(0, 0, Fraction(1, 2))
    assert lattice.jacobi_eval(p, 2) == Fraction(-1, 8)
    assert lattice.jacobi_recurrence(p, 2) == Fraction(-1, 8)


def test_generalised_binomial():
    assert lattice.gen_binom(Fraction(-1), 3) == -1
    assert lattice.gen_binom(5, 2) == 10
    assert lattice.gen_binom(5, -1) == 0
