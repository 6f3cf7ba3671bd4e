"""Coordination polynomials and exact certification of their zeros.

Real-rootedness, simplicity, interlacing and membership of every zero in
``(-3 - 2*sqrt(2), -3 + 2*sqrt(2))`` are decided with exact rational
arithmetic: Sturm sequences isolate the roots, bisection on signs refines
the enclosures. Floating point only shows up in the trigonometric
cross-check of the Delannoy zeros and in the density report.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import (
    CommonRoot,
    DegreeMismatch,
    NonSquarefree,
    RefinementLimitExceeded,
    SharedRootWithBoundary,
)
from .exact import ExactPolynomial, RationalInterval, poly_gcd
from .exact.polynomial import integer_coefficients, primitive_part, signed_remainder

MAX_HALVINGS = 256
DEFAULT_PRECISION = Fraction(1, 2**20)

#: x^2 + 6x + 1, negative exactly on (-3 - 2*sqrt(2), -3 + 2*sqrt(2))
BOUNDARY = ExactPolynomial([1, 6, 1])


# polynomial families -------------------------------------------------------


class PolyFamily:
    """Row polynomials ``l_n = (x+1) l_{n-1} + x l_{n-2}``, ``l_0 = 1``, ``l_1 = x + m``."""

    _x_plus_1 = ExactPolynomial([1, 1])
    _x = ExactPolynomial([0, 1])

    def __init__(self, m):
        self.m = m
        self._cache = [ExactPolynomial([1]), ExactPolynomial([m, 1])]
        self._lock = threading.Lock()

    def __getitem__(self, n):
        with self._lock:
            cache = self._cache
            while len(cache) <= n:
                cache.append(self._x_plus_1 * cache[-1] + self._x * cache[-2])
            return cache[n]


_M_OF_KIND = {"s": 0, "d": 1, "c": 2}


@lru_cache(maxsize=None)
def _family(m):
    return PolyFamily(m)


def family_poly(kind, n, m=None):
    """``d_n``, ``c_n``, ``s_n`` or ``ell^(m)_n`` (``kind='ell'`` with ``m``)."""
    if kind == "ell":
        if m is None:
            raise ValueError("kind 'ell' needs the family parameter m")
    elif kind in _M_OF_KIND:
        m = _M_OF_KIND[kind]
    else:
        raise ValueError(f"unknown polynomial family {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _family(m)[n]


# exact sign evaluation on integer coefficient lists -------------------------


def _sign(v):
    return (v > 0) - (v < 0)


def _sign_at(coeffs, x):
    """Sign of the integer polynomial ``coeffs`` at the rational ``x``."""
    num, den = x.numerator, x.denominator
    acc = coeffs[-1]
    pw = 1
    for c in reversed(coeffs[:-1]):
        pw *= den
        acc = acc * num + c * pw
    return _sign(acc)


def _sign_at_infinity(coeffs, positive):
    lead = _sign(coeffs[-1])
    if positive or (len(coeffs) - 1) % 2 == 0:
        return lead
    return -lead


def _variations(signs):
    count, last = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


# Sturm sequences ---------------------------------------------------------------


def _derivative(coeffs):
    return [k * coeffs[k] for k in range(1, len(coeffs))]


@lru_cache(maxsize=1024)
def _sturm_chain(coeffs):
    """Primitive Sturm chain of an integer polynomial (tuple, low degree first).

    Each remainder is replaced by its primitive part, a positive multiple, so
    sign sequences are unchanged while coefficient growth stays polynomial.
    """
    p0 = primitive_part(list(coeffs))
    chain = [p0]
    p1 = primitive_part(_derivative(p0))
    if not p1:
        return (tuple(p0),)
    chain.append(p1)
    while True:
        r = signed_remainder(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return tuple(tuple(p) for p in chain)


def sturm_sequence(p):
    """Sturm chain of ``p`` as a list of :class:`ExactPolynomial`."""
    return [ExactPolynomial(c) for c in _sturm_chain(tuple(integer_coefficients(p.coeffs)))]


def _chain_of(p):
    return _sturm_chain(tuple(primitive_part(integer_coefficients(p.coeffs))))


def _check_squarefree(chain):
    if len(chain[-1]) > 1:
        raise NonSquarefree(f"polynomial shares a factor of degree {len(chain[-1]) - 1} with its derivative")


def _variations_at(chain, x):
    if x is None:
        raise ValueError("use _variations_at_infinity")
    return _variations(_sign_at(list(c), x) for c in chain)


def _variations_at_infinity(chain, positive):
    return _variations(_sign_at_infinity(list(c), positive) for c in chain)


def sturm_root_count(p, interval):
    """Number of distinct real roots of a squarefree ``p`` in ``(lo, hi]``.

    Endpoints that happen to be roots need no perturbation: with zeros
    dropped from the sign sequence, ``V(lo) - V(hi)`` counts exactly the
    roots in the half-open interval.
    """
    chain = _chain_of(p)
    _check_squarefree(chain)
    return _variations_at(chain, interval.lo) - _variations_at(chain, interval.hi)


def real_root_count(p):
    """Number of distinct real roots of a squarefree ``p`` on the whole line."""
    chain = _chain_of(p)
    _check_squarefree(chain)
    return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)


# isolation --------------------------------------------------------------------


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint enclosures, ascending, one distinct real root in each."""

    polynomial: ExactPolynomial
    enclosures: tuple

    def __len__(self):
        return len(self.enclosures)

    def descending(self):
        """Enclosures ordered ``r_1 > r_2 > ...`` (largest root first)."""
        return self.enclosures[::-1]

    def midpoints(self):
        return [iv.midpoint for iv in self.enclosures]


@lru_cache(maxsize=2048)
def _squarefree_int(p):
    """Primitive integer coefficients of the squarefree part of ``p``."""
    g = poly_gcd(p, p.derivative())
    if g.degree:
        p = p // g
    return primitive_part(integer_coefficients(p.coeffs))


def _cauchy_bound(coeffs):
    lead = abs(coeffs[-1])
    b = 1 + max((Fraction(abs(c), lead) for c in coeffs[:-1]), default=0)
    bound = 1
    while bound <= b:
        bound *= 2
    return Fraction(bound)


def _split_point(coeffs, lo, hi):
    """A point strictly inside ``(lo, hi)`` that is not a root."""
    w = hi - lo
    mid = lo + w / 2
    if _sign_at(coeffs, mid):
        return mid
    j = 3
    while True:
        for cand in (mid - w / 2**j, mid + w / 2**j):
            if _sign_at(coeffs, cand):
                return cand
        j += 1


def _bisect_once(coeffs, iv):
    """One sign-bisection step on an enclosure with a single simple root in ``(lo, hi]``."""
    if iv.lo == iv.hi:
        return iv
    mid = iv.midpoint
    s_mid = _sign_at(coeffs, mid)
    if s_mid == 0:
        return RationalInterval(mid, mid)
    if _sign_at(coeffs, iv.lo) != s_mid:
        return RationalInterval(iv.lo, mid)
    return RationalInterval(mid, iv.hi)


def refine_enclosure(p, iv, width):
    """Halve ``iv`` until its width is at most ``width`` (capped at 256 halvings)."""
    coeffs = _squarefree_int(p)
    for _ in range(MAX_HALVINGS + 1):
        if iv.width <= width:
            return iv
        iv = _bisect_once(coeffs, iv)
    raise RefinementLimitExceeded(f"enclosure still wider than {width} after {MAX_HALVINGS} halvings")


@lru_cache(maxsize=2048)
def isolate_roots(p, precision=DEFAULT_PRECISION):
    """Enclose every distinct real root of ``p`` in an interval of width <= ``precision``."""
    if p.degree is None or p.degree < 1:
        raise ValueError("root isolation needs a nonconstant polynomial")
    precision = Fraction(precision)
    full = _squarefree_int(p)
    chain = _sturm_chain(tuple(full))
    bound = _cauchy_bound(full)
    lo, hi = -bound, bound
    found = []
    stack = [(lo, hi, _variations_at(chain, lo), _variations_at(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1:
            iv = RationalInterval(a, b)
            while iv.width > precision:
                iv = _bisect_once(full, iv)
            found.append(iv)
            continue
        m = _split_point(full, a, b)
        vm = _variations_at(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    found.sort()
    return RootIsolation(p, tuple(found))


def _signs_at_roots(g, g_iso, f, f_iso):
    """Sign of ``f`` at each root of ``g`` (ascending), by refining until enclosures separate."""
    gc = _squarefree_int(g)
    fc = _squarefree_int(f)
    f_encl = list(f_iso.enclosures)
    signs = []
    for iv in g_iso.enclosures:
        for _ in range(MAX_HALVINGS + 1):
            hits = [i for i, jv in enumerate(f_encl) if jv.overlaps(iv)]
            if not hits:
                signs.append(_sign_at(fc, iv.hi))
                break
            if iv.width == 0 and all(f_encl[i].width == 0 for i in hits):
                raise CommonRoot(f"common root at {iv.lo}")
            iv = _bisect_once(gc, iv)
            for i in hits:
                f_encl[i] = _bisect_once(fc, f_encl[i])
        else:
            raise RefinementLimitExceeded("could not separate root enclosures")
    return signs


# certificates --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _boundary_isolation():
    return isolate_roots(BOUNDARY)


@dataclass(frozen=True)
class ZeroCertificate:
    kind: str
    n: int
    degree: int
    simple: bool
    real_roots: int
    boundary_signs: tuple
    enclosures: tuple = field(repr=False)

    @property
    def real_rooted(self):
        return self.simple and self.real_roots == self.degree

    @property
    def inside_interval(self):
        return bool(self.boundary_signs) and all(s < 0 for s in self.boundary_signs)

    @property
    def passed(self):
        return self.real_rooted and self.inside_interval


@lru_cache(maxsize=None)
def check_real_rooted_and_interval(kind, n, m=None):
    """Certify that the ``n``-th polynomial has ``n`` simple real roots, all with ``r^2 + 6r + 1 < 0``."""
    p = family_poly(kind, n, m)
    chain = _chain_of(p)
    simple = len(chain[-1]) == 1
    iso = isolate_roots(p)
    if poly_gcd(p, BOUNDARY).degree:
        raise SharedRootWithBoundary(f"{kind}_{n} shares a root with x^2 + 6x + 1")
    signs = _signs_at_roots(p, iso, BOUNDARY, _boundary_isolation())
    return ZeroCertificate(
        kind=kind,
        n=n,
        degree=p.degree,
        simple=simple,
        real_roots=len(iso),
        boundary_signs=tuple(signs),
        enclosures=iso.enclosures,
    )


INTERLACES = "interlaces"
ALTERNATES_LEFT = "alternates_left"
NEITHER = "neither"


def check_interlacing(p, q):
    """Classify ``p`` against ``q`` by the sign-alternation criterion.

    With ``r_1 > r_2 > ...`` the roots of ``p``, ``p`` precedes ``q`` iff
    ``sign q(r_i) = (-1)^i`` for every ``i``. The verdict is ``interlaces``
    when ``deg q = deg p + 1`` and ``alternates_left`` when the degrees match.
    """
    dp, dq = p.degree, q.degree
    if dp is None or dq is None or dq not in (dp, dp + 1):
        raise DegreeMismatch(f"degrees {dp} and {dq} do not fit the criterion")
    if p.leading <= 0 or q.leading <= 0:
        raise ValueError("both polynomials need positive leading coefficients")
    if poly_gcd(p, q).degree:
        raise CommonRoot("polynomials share a root")
    if dp == 0:
        return INTERLACES if dq == 1 and real_root_count(q) == 1 else NEITHER
    p_iso, q_iso = isolate_roots(p), isolate_roots(q)
    if len(p_iso) != dp or len(q_iso) != dq:
        return NEITHER
    signs = _signs_at_roots(p, p_iso, q, q_iso)[::-1]  # r_1 first
    if all(s == (-1) ** i for i, s in enumerate(signs, start=1)):
        return INTERLACES if dq == dp + 1 else ALTERNATES_LEFT
    return NEITHER


# numeric cross-checks ------------------------------------------------------------


def _mpf(q):
    return mpmath.mpf(q.numerator) / q.denominator


def delannoy_zero(n, k):
    """``-(sqrt(1 + cos^2 t) - cos t)^2`` with ``t = k pi / (n+1)``, at the current precision."""
    t = k * mpmath.pi / (n + 1)
    c = mpmath.cos(t)
    return -((mpmath.sqrt(1 + c * c) - c) ** 2)


@dataclass(frozen=True)
class ZeroFormulaRow:
    k: int
    value: mpmath.mpf
    enclosure: RationalInterval
    inside: bool
    residual: mpmath.mpf
    ok: bool


@dataclass(frozen=True)
class ZeroFormulaReport:
    n: int
    tolerance: float
    rows: tuple

    @property
    def passed(self):
        return all(r.ok for r in self.rows)


def verify_delannoy_zero_formula(n, tolerance=1e-30, digits=60, width=Fraction(1, 2**60)):
    """Check the trigonometric zero formula against certified enclosures of ``d_n``."""
    p = family_poly("d", n)
    iso = isolate_roots(p, width)
    lead = abs(p.leading)
    tol = mpmath.mpf(tolerance)
    rows = []
    with mpmath.workdps(digits):
        # exact rational roots get point enclosures; allow for rounding of the formula
        slack = mpmath.mpf(10) ** (5 - digits)
        descending = iso.descending()
        for k in range(1, n + 1):
            r = delannoy_zero(n, k)
            iv = descending[k - 1] if k <= len(descending) else None
            inside = iv is not None and _mpf(iv.lo) - slack <= r <= _mpf(iv.hi) + slack
            residual = abs(mpmath.polyval(list(reversed([mpmath.mpf(c) for c in p.coeffs])), r))
            rows.append(
                ZeroFormulaRow(
                    k=k,
                    value=r,
                    enclosure=iv,
                    inside=inside,
                    residual=residual,
                    ok=inside and residual < tol * lead,
                )
            )
    return ZeroFormulaReport(n=n, tolerance=tolerance, rows=tuple(rows))


@dataclass(frozen=True)
class DensityReport:
    N: int
    pooled: int
    max_gap: float
    min_root: float
    max_root: float
    all_inside: bool
    gap_tolerance: float

    @property
    def within_tolerance(self):
        return self.max_gap <= self.gap_tolerance


def empirical_zero_density(N, gap_tolerance=1.0):
    """Pool the zeros of ``c_1 .. c_N`` and measure the largest gap across the limit interval.

    Gaps include the stretches from each end of ``[-3 - 2*sqrt(2), -3 + 2*sqrt(2)]``
    to the nearest pooled zero.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    points = []
    inside = True
    for n in range(1, N + 1):
        cert = check_real_rooted_and_interval("c", n)
        inside = inside and cert.passed
        points.extend(float(iv.midpoint) for iv in cert.enclosures)
    points.sort()
    left = -3 - 2 * 2**0.5
    right = -3 + 2 * 2**0.5
    grid = [left] + points + [right]
    max_gap = max(b - a for a, b in zip(grid, grid[1:]))
    return DensityReport(
        N=N,
        pooled=len(points),
        max_gap=max_gap,
        min_root=points[0],
        max_root=points[-1],
        all_inside=inside,
        gap_tolerance=gap_tolerance,
    )


@dataclass(frozen=True)
class EscapeRow:
    m: int
    first_n: int  # None when no zero leaves the interval for n <= n_max
    n_max: int


def first_left_escape(m, n_max):
    """Smallest ``n <= n_max`` for which ``ell^(m)_n`` has a zero below ``-3 - 2*sqrt(2)``.

    Purely empirical: a ``None`` answer says nothing about larger ``n``.
    """
    for n in range(1, n_max + 1):
        cert = check_real_rooted_and_interval("ell", n, m)
        for iv, s in zip(cert.enclosures, cert.boundary_signs):
            if s > 0 and iv.hi < -3:
                return EscapeRow(m, n, n_max)
    return EscapeRow(m, None, n_max)
