"""Coefficient analytics, normality statistics and Hankel determinants."""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import lattice
from .errors import NegativeCoefficient, NotSquare
from .exact import ExactMatrix, ExactPolynomial, det_fraction_free, normalize
from .zeros import family_poly

# coefficient statistics ---------------------------------------------------------


@dataclass(frozen=True)
class CoeffStats:
    n: int
    total: int
    mean: Fraction
    variance: Fraction
    modes: tuple


def modes_of(seq):
    top = max(seq)
    return tuple(i for i, a in enumerate(seq) if a == top)


def coeff_stats(p):
    """Mean ``A'(1)/A(1)`` and variance ``A''(1)/A(1) + mean - mean^2`` of the coefficient row."""
    coeffs = list(p.coeffs) if isinstance(p, ExactPolynomial) else list(p)
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient("coefficient statistics need nonnegative coefficients")
    if not any(coeffs):
        raise ValueError("all coefficients vanish")
    total = sum(coeffs)
    first = sum(k * c for k, c in enumerate(coeffs))
    second = sum(k * (k - 1) * c for k, c in enumerate(coeffs))
    mean = Fraction(first, total)
    variance = Fraction(second, total) + mean - mean * mean
    return CoeffStats(
        n=len(coeffs) - 1,
        total=normalize(total),
        mean=mean,
        variance=variance,
        modes=modes_of(coeffs),
    )


@dataclass(frozen=True)
class ConcavityReport:
    logconcave: bool
    unimodal: bool
    modes: tuple
    newton: bool = None
    darroch: bool = None


def is_logconcave(seq):
    return all(seq[k - 1] * seq[k + 1] <= seq[k] ** 2 for k in range(1, len(seq) - 1))


def is_unimodal(seq):
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < len(seq) and seq[k] >= seq[k + 1]:
        k += 1
    return k == len(seq) - 1


def newton_inequalities(seq):
    """``a_k^2 k (n-k) >= a_{k-1} a_{k+1} (k+1)(n-k+1)`` for ``1 <= k <= n-1``."""
    n = len(seq) - 1
    return all(
        seq[k] ** 2 * k * (n - k) >= seq[k - 1] * seq[k + 1] * (k + 1) * (n - k + 1) for k in range(1, n)
    )


def check_logconcave_unimodal(seq, real_rooted=False):
    """Log-concavity and modes; Newton and Darroch checks when the row is real-rooted."""
    seq = list(seq)
    if any(a < 0 for a in seq):
        raise NegativeCoefficient("sequence has a negative entry")
    modes = modes_of(seq)
    report = dict(logconcave=is_logconcave(seq), unimodal=is_unimodal(seq), modes=modes)
    if real_rooted:
        mean = coeff_stats(seq).mean
        report["newton"] = newton_inequalities(seq)
        report["darroch"] = all(abs(m - mean) < 1 for m in modes)
    return ConcavityReport(**report)


# log-convexity of the central sequences ------------------------------------------


@dataclass(frozen=True)
class LogConvexReport:
    kind: str
    N: int
    strictly_logconvex: bool
    initial_conditions: bool
    coefficient_signs: bool
    determinant_conditions: bool
    first_failure: int = None

    @property
    def passed(self):
        return (
            self.strictly_logconvex
            and self.initial_conditions
            and self.coefficient_signs
            and self.determinant_conditions
        )


def check_logconvex_3term(kind, N):
    """Direct strict log-convexity plus the recurrence-coefficient hypotheses that imply it.

    For ``a_n z_n = b_n z_{n-1} - c_n z_{n-2}`` the hypotheses are ``a_n > 0``,
    ``b_n, c_n >= 0``, ``z_1 > z_0``, ``z_0 z_2 > z_1^2`` and
    ``a_n b_{n+1} - a_{n+1} b_n >= max(0, a_n c_{n+1} - a_{n+1} c_n)`` for ``n >= 2``.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    z = lattice.diagonal(kind, N + 1).values
    a, b, c, _, _ = lattice.RECURRENCES[kind]
    first_failure = None
    direct = True
    for n in range(1, N + 1):
        if not z[n - 1] * z[n + 1] > z[n] ** 2:
            direct = False
            first_failure = n
            break
    initial = z[1] > z[0] and z[0] * z[2] > z[1] ** 2
    signs = all(a(n) > 0 and b(n) >= 0 and c(n) >= 0 for n in range(2, N + 2))
    dets = all(
        a(n) * b(n + 1) - a(n + 1) * b(n) >= max(0, a(n) * c(n + 1) - a(n + 1) * c(n)) for n in range(2, N + 1)
    )
    return LogConvexReport(kind, N, direct, initial, signs, dets, first_failure)


# normality --------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalityReport:
    n: int
    mean: Fraction
    variance: Fraction
    clt_sup_error: float
    llt_sup_error: float


def _clt_error(probs, mu, sigma):
    """Sup of ``|F(mu + x sigma) - Phi(x)|``, attained at the jumps of ``F``."""
    cum = mpmath.mpf(0)
    err = mpmath.mpf(0)
    for k, pk in enumerate(probs):
        phi = mpmath.ncdf((k - mu) / sigma)
        err = max(err, abs(cum - phi))
        cum += pk
        err = max(err, abs(cum - phi))
    return err


def _llt_error(probs, mu, sigma):
    """Sup of ``|sigma p(floor(mu + x sigma)) - phi(x)|`` over all real ``x``."""
    density = mpmath.npdf
    n = len(probs) - 1
    err = mpmath.mpf(0)
    # piece k covers x in [(k - mu)/sigma, (k + 1 - mu)/sigma)
    for k in range(-1, n + 2):
        value = sigma * probs[k] if 0 <= k <= n else mpmath.mpf(0)
        lo = (k - mu) / sigma if k >= 0 else None
        hi = (k + 1 - mu) / sigma if k <= n else None
        candidates = []
        candidates.append(density(lo) if lo is not None else mpmath.mpf(0))
        candidates.append(density(hi) if hi is not None else mpmath.mpf(0))
        if (lo is None or lo <= 0) and (hi is None or 0 < hi):
            candidates.append(density(0))
        err = max(err, max(abs(value - c) for c in candidates))
    return err


def normality_report(kind, n, digits=40):
    """CLT and LLT sup-discrepancies of the normalised coefficient row of ``kind_n``."""
    p = family_poly(kind, n)
    stats = coeff_stats(p)
    with mpmath.workdps(digits):
        mu = mpmath.mpf(stats.mean.numerator) / stats.mean.denominator
        var = mpmath.mpf(stats.variance.numerator) / stats.variance.denominator
        if var == 0:
            return NormalityReport(n, stats.mean, stats.variance, float("nan"), float("nan"))
        sigma = mpmath.sqrt(var)
        total = mpmath.mpf(stats.total)
        probs = [mpmath.mpf(c) / total for c in p.coeffs]
        clt = _clt_error(probs, mu, sigma)
        llt = _llt_error(probs, mu, sigma)
    return NormalityReport(n, stats.mean, stats.variance, float(clt), float(llt))


def mean_drift(n):
    """``|mean(c_n) - (n-1)/2 - 1/(2 sqrt 2)|``.

    The drift decays geometrically, so the working precision grows with ``n``.
    """
    mean = coeff_stats(family_poly("c", n)).mean
    with mpmath.workdps(40 + n):
        value = mpmath.mpf(mean.numerator) / mean.denominator - mpmath.mpf(n - 1) / 2 - 1 / (2 * mpmath.sqrt(2))
        return abs(value)


def brackets_limit_interval(t0, t1):
    """Exact check that ``t0 < 3 - 2 sqrt 2`` and ``t1 > 3 + 2 sqrt 2`` for rationals ``t0, t1``."""
    t0, t1 = Fraction(t0), Fraction(t1)
    # t0 < 3 - 2 sqrt 2  <=>  3 - t0 > 0 and (3 - t0)^2 > 8
    low = t0 > 0 and 3 - t0 > 0 and (3 - t0) ** 2 > 8
    # t1 > 3 + 2 sqrt 2  <=>  t1 - 3 > 0 and (t1 - 3)^2 > 8
    high = t1 - 3 > 0 and (t1 - 3) ** 2 > 8
    return low and high


def variance_lower_bound_holds(kind, n, t0=Fraction(1, 6), t1=Fraction(6)):
    """``sigma_n^2 > t0 n / (1 + t1)^2`` exactly."""
    variance = coeff_stats(family_poly(kind, n)).variance
    return variance > Fraction(t0) * n / (1 + Fraction(t1)) ** 2


# Hankel determinants ------------------------------------------------------------

HANKEL_KINDS = ("delta", "delta_bar", "epsilon", "sigma", "gamma")


def hankel_sequence(kind, length):
    """First ``length`` terms of a named sequence."""
    if kind == "delta":
        return list(lattice.diagonal("D", length - 1).values)
    if kind == "delta_bar":
        return list(lattice.diagonal("D", length).values[1:])
    if kind == "epsilon":
        return [1] + list(lattice.diagonal("D", max(length - 2, 0)).values)[: length - 1]
    if kind == "sigma":
        return list(lattice.diagonal("S", length - 1).values)
    if kind == "gamma":
        return list(lattice.diagonal("C", length - 1).values)
    raise ValueError(f"unknown Hankel sequence {kind!r}")


def hankel_matrix(seq, n):
    """``[a_{i+j}]_{0 <= i, j <= n}``."""
    return ExactMatrix.from_function(n + 1, n + 1, lambda i, j: seq[i + j])


def hankel_determinants(seq, N):
    return [det_fraction_free(hankel_matrix(seq, n)) for n in range(N + 1)]


def closed_form_hankel(kind, n):
    if kind == "delta":
        return 2 ** (n * (n + 3) // 2)
    if kind == "delta_bar":
        return 2 ** (n * (n + 3) // 2) * (2 ** (n + 1) + 1)
    if kind == "epsilon":
        return 2 ** (n * (n + 1) // 2)
    return None


@dataclass(frozen=True)
class HankelSuite:
    kind: str
    determinants: tuple
    closed_form_ok: bool = None

    @property
    def N(self):
        return len(self.determinants) - 1


def hankel_suite(kind, N):
    """``h_0 .. h_N`` of a named sequence, compared with its closed form when one is known."""
    seq = hankel_sequence(kind, 2 * N + 1)
    dets = tuple(hankel_determinants(seq, N))
    closed = None
    if closed_form_hankel(kind, 0) is not None:
        closed = all(d == closed_form_hankel(kind, n) for n, d in enumerate(dets))
    return HankelSuite(kind, dets, closed)


@dataclass(frozen=True)
class SMVerdict:
    kind: str
    N: int
    sm_consistent: bool
    h: tuple
    h_shift: tuple
    witness: tuple = None  # (n, 'h' or 'h_shift', value)


_SM_SEQ = {"D": "D", "S": "S", "C": "C"}


def check_sm(kind, N):
    """Stieltjes-moment consistency: ``h_n(a) >= 0`` and ``h_n(shifted a) >= 0`` for ``n <= N``."""
    if kind not in _SM_SEQ:
        raise ValueError(f"unknown sequence {kind!r}")
    if N < 2:
        raise ValueError("N must be at least 2")
    z = lattice.diagonal(kind, 2 * N + 1).values
    h = hankel_determinants(z, N)
    h_shift = hankel_determinants(z[1:], N)
    witness = None
    for n in range(N + 1):
        if h[n] < 0:
            witness = (n, "h", h[n])
            break
        if h_shift[n] < 0:
            witness = (n, "h_shift", h_shift[n])
            break
    return SMVerdict(kind, N, witness is None, tuple(h), tuple(h_shift), witness)


def desnanot_jacobi_check(M):
    """``det M * det M_interior == det NW * det SE - det NE * det SW`` exactly.

    NW drops the last row and column, SE the first, NE the last row and
    first column, SW the first row and last column.
    """
    if M.rows != M.cols:
        raise NotSquare("Desnanot-Jacobi needs a square matrix")
    k = M.rows
    if k < 3:
        raise ValueError("Desnanot-Jacobi needs size >= 3")
    interior = range(1, k - 1)
    head = range(k - 1)
    tail = range(1, k)
    d = det_fraction_free(M)
    lhs = d * det_fraction_free(M.submatrix(interior, interior))
    rhs = det_fraction_free(M.submatrix(head, head)) * det_fraction_free(
        M.submatrix(tail, tail)
    ) - det_fraction_free(M.submatrix(head, tail)) * det_fraction_free(M.submatrix(tail, head))
    return lhs == rhs


def telescoping_identity(n):
    """``h_n(eps) h_{n-2}(delta_bar) == h_{n-1}(eps) h_{n-1}(delta_bar) - h_{n-1}(delta)^2``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    eps = hankel_suite("epsilon", n).determinants
    dbar = hankel_suite("delta_bar", n - 1).determinants
    delta = hankel_suite("delta", n - 1).determinants
    return eps[n] * dbar[n - 2] == eps[n - 1] * dbar[n - 1] - delta[n - 1] ** 2


# rows and columns of C --------------------------------------------------------------


@dataclass(frozen=True)
class ColumnRowReport:
    index: int
    column: tuple
    row: tuple
    column_logconcave: bool
    row_logconcave: bool
    row_matches_gf: bool

    @property
    def passed(self):
        return self.column_logconcave and self.row_logconcave and self.row_matches_gf


def row_gf_prefix(n, length):
    """Coefficients of ``2(1+y)^(n-1) / (1-y)^(n+1)`` (``n >= 1``)."""
    from .exact import TruncatedSeries

    order = length - 1
    num = TruncatedSeries([1, 1], order) ** (n - 1) * 2
    den = TruncatedSeries([1, -1], order) ** (n + 1)
    return [normalize(c) for c in (num / den).coeffs]


def check_column_row_logconcavity(index, length, which="C"):
    """Log-concavity of column ``index`` and row ``index`` of ``C`` over ``length`` entries."""
    if which != "C":
        raise ValueError("only the coordination matrix C is supported")
    if length < 3:
        raise ValueError("length must be at least 3")
    column = tuple(lattice.C(n, index) for n in range(length))
    row = tuple(lattice.C(index, k) for k in range(length))
    gf_ok = True
    if index >= 1:
        gf_ok = list(row) == row_gf_prefix(index, length)
    return ColumnRowReport(index, column, row, is_logconcave(column), is_logconcave(row), gf_ok)

