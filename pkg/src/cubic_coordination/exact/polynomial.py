"""Dense univariate polynomials over Q, lowest degree first."""

from fractions import Fraction
from math import gcd, lcm

from .series import normalize


class ExactPolynomial:
    """Immutable polynomial with exact rational coefficients.

    The zero polynomial has ``degree is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [normalize(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(reversed(terms))

    def _coerce(self, other):
        return other if isinstance(other, ExactPolynomial) else ExactPolynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self), len(other))
        return ExactPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExactPolynomial):
            k = normalize(other)
            return ExactPolynomial([k * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return ExactPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = ExactPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k=1):
        """Multiply by ``x**k``."""
        return ExactPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize(acc) if isinstance(acc, (int, Fraction)) else acc

    def sign_at(self, x):
        v = self(x)
        return (v > 0) - (v < 0)

    def derivative(self):
        return ExactPolynomial([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.leading)
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - dq] = q
                for i, c in enumerate(other.coeffs):
                    rem[k - dq + i] -= q * c
        return ExactPolynomial(quot), ExactPolynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def primitive_integer(self):
        """Integer coefficient list proportional to ``self`` with positive content 1."""
        return primitive_part(integer_coefficients(self.coeffs))

    def monic(self):
        return ExactPolynomial([Fraction(c) / self.leading for c in self.coeffs])

    def to_series(self, order):
        from .series import TruncatedSeries

        return TruncatedSeries(self.coeffs, order)


# integer coefficient-list helpers (lowest degree first) ------------------


def integer_coefficients(coeffs):
    """Scale rational coefficients by the lcm of their denominators."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return [int(c * den) for c in coeffs]


def content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def primitive_part(coeffs):
    """Divide by the (positive) content; sign is preserved."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    g = content(coeffs)
    return [c // g for c in coeffs] if g > 1 else coeffs


def pseudo_remainder(a, b):
    """Remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b`` over the integers."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * c for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def signed_remainder(a, b):
    """A positive multiple of ``a mod b`` with integer coefficients."""
    if len(a) < len(b):
        return list(a)
    delta = len(a) - len(b) + 1
    r = pseudo_remainder(a, b)
    if b[-1] < 0 and delta % 2 == 1:
        r = [-c for c in r]
    return primitive_part(r)


def poly_gcd(p, q):
    """Monic gcd of two polynomials (primitive remainder sequence)."""
    a = primitive_part(integer_coefficients(p.coeffs))
    b = primitive_part(integer_coefficients(q.coeffs))
    if not a:
        return ExactPolynomial(b).monic() if b else ExactPolynomial()
    while b:
        a, b = b, signed_remainder(a, b)
    return ExactPolynomial(a).monic()
