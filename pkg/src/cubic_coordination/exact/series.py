"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` carries the coefficients ``c_0 .. c_order`` of a
power series together with the highest exponent that is actually known.
Every binary operation reports the smallest order it can vouch for, so a
result never claims more precision than its inputs.
"""

from fractions import Fraction
from numbers import Rational

from ..errors import (
    CompositionNonNilpotent,
    DivisionByNonUnit,
    InsufficientOrder,
    NotReversible,
    SqrtUnsupportedConstantTerm,
)


def normalize(value):
    """Return ``value`` as an ``int`` when integral, else as a ``Fraction``."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return normalize(Fraction(value.numerator, value.denominator))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class TruncatedSeries:
    """Power series known exactly up to and including ``x**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [normalize(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.order = order

    # construction -------------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs, order):
        """An exactly known polynomial, viewed to ``order``."""
        return cls(coeffs, order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order)

    @classmethod
    def rational(cls, numerator, denominator, order):
        """Expansion of ``numerator(x) / denominator(x)`` for coefficient lists."""
        return cls(numerator, order) / cls(denominator, order)

    @classmethod
    def geometric(cls, ratio, order):
        """``1 / (1 - ratio*x)``."""
        ratio = normalize(ratio)
        return cls([ratio**n for n in range(order + 1)], order)

    # access -------------------------------------------------------------

    def __getitem__(self, n):
        if n < 0:
            return 0
        if n > self.order:
            raise InsufficientOrder(f"coefficient {n} requested, series known to order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or ``None`` if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order):
        if order > self.order:
            raise InsufficientOrder(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def agrees_with(self, other, order=None):
        """True if both series share coefficients up to ``order`` (default: common order)."""
        n = min(self.order, other.order) if order is None else order
        return all(self[i] == other[i] for i in range(n + 1))

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{terms}{more}], order={self.order})"

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([normalize(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            k = normalize(other)
            return TruncatedSeries([k * c for c in self.coeffs], self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            k = Fraction(normalize(other))
            return TruncatedSeries([c / k for c in self.coeffs], self.order)
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(self._coerce(other), self)

    def __pow__(self, k):
        if k < 0:
            return TruncatedSeries.one(self.order) / (self**-k)
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k=1):
        """Multiply by ``x**k``; the known order grows by ``k``."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order + k)

    def divide_by_x(self, k=1):
        """Divide by ``x**k``; the leading ``k`` coefficients must vanish."""
        if any(self[i] for i in range(min(k, self.order + 1))):
            raise DivisionByNonUnit(f"series is not divisible by x^{k}")
        if k > self.order:
            raise InsufficientOrder("nothing left after dividing by x")
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def derivative(self):
        if self.order == 0:
            raise InsufficientOrder("derivative of an order-0 series is unknown")
        return TruncatedSeries([i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1)

    def integral(self):
        """Antiderivative with zero constant term."""
        return TruncatedSeries([0] + [Fraction(c, i + 1) for i, c in enumerate(self.coeffs)], self.order + 1)

    def compose(self, inner):
        return series_compose(self, inner)

    def reversion(self):
        return series_reversion(self)

    def sqrt(self):
        return series_sqrt(self)

    def evaluate_polynomial(self, x):
        """Sum of the known coefficients at ``x`` (exact)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize(acc)


def series_mul(a, b):
    """Cauchy product truncated to the common order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = 0
        for i in range(k + 1):
            ai = ac[i]
            if ai:
                s += ai * bc[k - i]
        out.append(s)
    return TruncatedSeries(out, n)


def series_div(a, b):
    """Quotient ``q`` with ``q*b == a`` to the common order."""
    b0 = b.coeffs[0]
    if b0 == 0:
        raise DivisionByNonUnit("constant term of the divisor is zero")
    n = min(a.order, b.order)
    inv_b0 = Fraction(1, 1) / b0
    bc = b.coeffs
    q = []
    for k in range(n + 1):
        s = a.coeffs[k]
        for i in range(1, k + 1):
            bi = bc[i]
            if bi:
                s -= bi * q[k - i]
        q.append(normalize(s * inv_b0))
    return TruncatedSeries(q, n)


def series_compose(a, b):
    """``a(b(x))`` for ``b(0) == 0``, to ``min(order(a), order(b))``."""
    if b.coeffs[0] != 0:
        raise CompositionNonNilpotent("inner series must have zero constant term")
    n = min(a.order, b.order)
    b = b.truncate(n)
    # Horner in the series ring: a_0 + b*(a_1 + b*(a_2 + ...))
    acc = TruncatedSeries([a.coeffs[n]], n)
    for k in range(n - 1, -1, -1):
        acc = series_mul(acc, b) + a.coeffs[k]
    return acc


def series_reversion(f):
    """Compositional inverse by Lagrange inversion.

    ``[x^n] fbar = (1/n) [x^(n-1)] (x/f(x))^n``.
    """
    if f.order < 1:
        raise NotReversible("need at least the linear coefficient")
    if f.coeffs[0] != 0 or f.coeffs[1] == 0:
        raise NotReversible("reversion needs f(0) = 0 and f'(0) != 0")
    n = f.order
    h = TruncatedSeries.one(n - 1) / f.divide_by_x(1)  # x / f(x), known to n-1
    out = [0]
    power = TruncatedSeries.one(n - 1)
    for k in range(1, n + 1):
        power = series_mul(power, h)
        out.append(normalize(Fraction(power.coeffs[k - 1], k)))
    return TruncatedSeries(out, n)


def series_sqrt(a):
    """Square root with constant term 1 of a series with ``a(0) == 1``."""
    if a.coeffs[0] != 1:
        raise SqrtUnsupportedConstantTerm("only series with constant term 1 are supported")
    n = a.order
    s = [1]
    for k in range(1, n + 1):
        acc = a.coeffs[k]
        for i in range(1, k):
            acc -= s[i] * s[k - i]
        s.append(normalize(Fraction(acc) / 2))
    return TruncatedSeries(s, n)
