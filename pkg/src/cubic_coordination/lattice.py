"""Coordination, Delannoy and Schroder numbers from recurrences and closed forms.

``L^(m)(n, k)`` obeys the Delannoy-type recurrence
``L(n,k) = L(n-1,k-1) + L(n-1,k) + L(n,k-1)`` with ``L(0,k) = 1`` and
``L(n,0) = m``; ``m = 0, 1, 2`` give ``S``, ``D`` and ``C`` respectively.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DegenerateRecurrence
from .exact import TruncatedSeries, normalize


class LatticeFamily:
    """Memoised table of ``L^(m)(n, k)``, grown on demand."""

    def __init__(self, m):
        self.m = m
        self._rows = [[1]]
        self._lock = threading.Lock()

    def __repr__(self):
        return f"LatticeFamily(m={self.m}, rows={len(self._rows)})"

    def _grow(self, n, k):
        rows = self._rows
        # widen existing rows
        if len(rows[0]) <= k:
            for i, row in enumerate(rows):
                while len(row) <= k:
                    j = len(row)
                    if i == 0:
                        row.append(1)
                    else:
                        above = rows[i - 1]
                        row.append(above[j - 1] + above[j] + row[j - 1])
        width = len(rows[0])
        while len(rows) <= n:
            above = rows[-1]
            row = [self.m]
            for j in range(1, width):
                row.append(above[j - 1] + above[j] + row[j - 1])
            rows.append(row)

    def __call__(self, n, k):
        if n < 0 or k < 0:
            return 0
        with self._lock:
            if n >= len(self._rows) or k >= len(self._rows[0]):
                self._grow(n, k)
            return self._rows[n][k]

    def table(self, rows, cols):
        self(rows - 1, cols - 1)
        return [list(r[:cols]) for r in self._rows[:rows]]


@lru_cache(maxsize=None)
def family(m):
    return LatticeFamily(m)


def lattice_number(m, n, k):
    """``L^(m)(n, k)``; zero when an index is negative."""
    return family(m)(n, k)


def S(n, k):
    return lattice_number(0, n, k)


def D(n, k):
    return lattice_number(1, n, k)


def C(n, k):
    return lattice_number(2, n, k)


def _binom(n, k):
    """Binomial coefficient that vanishes outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def closed_form_S(n, k):
    """``sum_i binom(n-1, i-1) binom(k, i) 2^i`` (``S(0, k) = 1``)."""
    if n == 0:
        return 1
    return sum(_binom(n - 1, i - 1) * _binom(k, i) * 2**i for i in range(k + 1))


def closed_form_D(n, k, variant="binom2"):
    if variant == "binom2":
        return sum(_binom(n, i) * _binom(k, i) * 2**i for i in range(min(n, k) + 1))
    if variant == "binomshift":
        return sum(_binom(n + i, k) * _binom(k, i) for i in range(k + 1))
    raise ValueError(f"unknown variant {variant!r}")


# central sequences ---------------------------------------------------------

KINDS = ("D", "S", "C", "Schroder")


@dataclass(frozen=True)
class DiagonalSequence:
    kind: str
    values: tuple

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)


def _three_term(a, b, c, z0, z1, up_to):
    """Solve ``a(n) z_n = b(n) z_{n-1} - c(n) z_{n-2}`` from ``n = 2``."""
    z = [z0, z1][: up_to + 1]
    for n in range(2, up_to + 1):
        num = b(n) * z[n - 1] - c(n) * z[n - 2]
        q, r = divmod(num, a(n))
        if r:
            raise ArithmeticError(f"recurrence produced a non-integer at n={n}")
        z.append(q)
    return z


RECURRENCES = {
    # kind: (a_n, b_n, c_n, z_0, z_1)
    "D": (lambda n: n, lambda n: 3 * (2 * n - 1), lambda n: n - 1, 1, 3),
    "S": (
        lambda n: n * (2 * n - 3),
        lambda n: 4 * (3 * n * n - 6 * n + 2),
        lambda n: (n - 2) * (2 * n - 1),
        1,
        2,
    ),
    "C": (
        lambda n: n * (n - 1),
        lambda n: 3 * (2 * n - 1) * (n - 1),
        lambda n: n * (n - 2),
        1,
        4,
    ),
}


def diagonal(kind, up_to):
    """``values[0..up_to]`` of a central sequence.

    ``D``, ``S`` and ``C`` come from their three-term recurrences, the large
    Schroder numbers from the expansion of their generating function.
    """
    if kind in RECURRENCES:
        a, b, c, z0, z1 = RECURRENCES[kind]
        return DiagonalSequence(kind, tuple(_three_term(a, b, c, z0, z1, up_to)))
    if kind == "Schroder":
        from .riordan import schroder_series

        return DiagonalSequence(kind, tuple(schroder_series(up_to).coeffs))
    raise ValueError(f"unknown diagonal kind {kind!r}")


def schroder_by_recurrence(up_to):
    """``(n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}``, ``r_0 = 1, r_1 = 2``."""
    return _three_term(lambda n: n + 1, lambda n: 3 * (2 * n - 1), lambda n: n - 2, 1, 2, up_to)


def gf_expand(kind, up_to):
    """Coefficients of the closed-form generating function of a central sequence."""
    order = up_to
    x = TruncatedSeries.x(order)
    root = TruncatedSeries([1, -6, 1], order).sqrt()  # sqrt(1 - 6x + x^2)
    if kind == "D":
        series = 1 / root
    elif kind == "S":
        series = (1 + x + root) / (2 * root)
    elif kind == "C":
        series = (3 - x - root) / (2 * root)
    elif kind == "Schroder":
        from .riordan import schroder_series

        series = schroder_series(order)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return [normalize(c) for c in series.coeffs]


# Jacobi polynomials ----------------------------------------------------------


@dataclass(frozen=True)
class JacobiParams:
    alpha: Fraction
    beta: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


def gen_binom(x, k):
    """Generalised binomial ``x (x-1) ... (x-k+1) / k!`` for rational ``x``."""
    if k < 0:
        return 0
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den


def jacobi_eval(p, n):
    """``P_n^(alpha, beta)(t)`` from the explicit binomial sum."""
    a, b, t = p.alpha, p.beta, p.t
    up = (t + 1) / 2
    down = (t - 1) / 2
    total = sum(gen_binom(n + a, i) * gen_binom(n + b, n - i) * up**i * down ** (n - i) for i in range(n + 1))
    return normalize(total)


def jacobi_recurrence(p, n):
    """``P_n`` from the three-term recurrence; raises if a leading factor vanishes."""
    a, b, t = p.alpha, p.beta, p.t
    prev2, prev = Fraction(1), (a + 1) + (a + b + 2) * (t - 1) / 2
    if n == 0:
        return 1
    for k in range(2, n + 1):
        s = 2 * k + a + b
        lead = 2 * k * (k + a + b) * (s - 2)
        if lead == 0:
            raise DegenerateRecurrence(f"leading factor vanishes at n={k}")
        nxt = ((s - 1) * (s * (s - 2) * t + a * a - b * b) * prev - 2 * (k + a - 1) * (k + b - 1) * s * prev2) / lead
        prev2, prev = prev, nxt
    return normalize(prev)


JACOBI_PARAMS = {
    "D": JacobiParams(0, 0, 3),
    "S": JacobiParams(0, -1, 3),
    "C": JacobiParams(1, -1, 3),
}


def central_by_jacobi(kind, up_to):
    params = JACOBI_PARAMS[kind]
    return [jacobi_eval(params, n) for n in range(up_to + 1)]

