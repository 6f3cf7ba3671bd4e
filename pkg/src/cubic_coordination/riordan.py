"""Riordan arrays: construction, group law, A-/Z-sequences, decompositions.

All matrix-level statements are made on finite leading windows. A window
of ``n`` rows needs the generating series known to order ``n - 1``; every
named constructor takes an ``order`` argument for that reason.
"""

from dataclasses import dataclass

from .errors import ImproperArray, ImproperLeftFactor, InsufficientOrder
from .exact import ExactMatrix, TruncatedSeries

DEFAULT_ORDER = 40


class RiordanArray:
    """The infinite matrix whose ``k``-th column has generating function ``g * f**k``."""

    __slots__ = ("g", "f", "name")

    def __init__(self, g, f, name=None):
        self.g = g
        self.f = f
        self.name = name

    @property
    def order(self):
        return min(self.g.order, self.f.order)

    @property
    def proper(self):
        return self.g[0] == 1 and self.f[0] == 0 and self.f.order >= 1 and self.f[1] != 0

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<RiordanArray{label} order={self.order} proper={self.proper}>"

    def _need(self, n):
        if n > self.order:
            raise InsufficientOrder(f"row {n} needs series order {n}, have {self.order}")

    def column(self, k, rows=None):
        """Generating series of column ``k``, truncated to ``rows`` rows."""
        rows = self.order + 1 if rows is None else rows
        self._need(rows - 1)
        g = self.g.truncate(rows - 1)
        f = self.f.truncate(rows - 1)
        return g * f**k

    def entry(self, n, k):
        return riordan_entry(self, n, k)

    def window(self, rows, cols=None):
        """The leading ``rows x cols`` block as an :class:`ExactMatrix`."""
        cols = rows if cols is None else cols
        self._need(rows - 1)
        g = self.g.truncate(rows - 1)
        f = self.f.truncate(rows - 1)
        columns = []
        col = g
        for k in range(cols):
            if k:
                col = col * f
            columns.append(col.coeffs)
        return ExactMatrix([[columns[k][n] for k in range(cols)] for n in range(rows)])

    def __matmul__(self, other):
        return riordan_multiply(self, other)

    def inverse(self):
        return riordan_inverse(self)


def riordan_entry(R, n, k):
    """Coefficient of ``x**n`` in ``g * f**k``."""
    R._need(n)
    g = R.g.truncate(n)
    f = R.f.truncate(n)
    return (g * f**k)[n]


def riordan_multiply(R1, R2):
    """``R(d, h) * R(g, f) = R(d * g(h), f(h))``; the left factor must be proper."""
    if not R1.proper:
        raise ImproperLeftFactor("left factor of a Riordan product must be proper")
    d, h = R1.g, R1.f
    return RiordanArray(d * R2.g.compose(h), R2.f.compose(h))


def riordan_inverse(R):
    """``R(1 / g(fbar), fbar)`` where ``fbar`` is the compositional inverse of ``f``."""
    if not R.proper:
        raise ImproperArray("only proper Riordan arrays are invertible in the group")
    fbar = R.f.reversion()
    return RiordanArray(1 / R.g.compose(fbar), fbar)


@dataclass(frozen=True)
class ProductionData:
    """A- and Z-sequences of a proper Riordan array."""

    A: TruncatedSeries
    Z: TruncatedSeries

    def production_matrix(self, size):
        """Columns ``Z, A, x*A, x**2*A, ...`` as a ``size x size`` window."""
        A, Z = self.A, self.Z

        def entry(i, j):
            if j == 0:
                return Z[i]
            return A[i - j + 1] if i - j + 1 >= 0 else 0

        return ExactMatrix.from_function(size, size, entry)


def extract_production(R):
    """Solve ``f = x*A(f)`` and ``g = 1/(1 - x*Z(f))`` for ``A`` and ``Z``."""
    if not R.proper:
        raise ImproperArray("A- and Z-sequences are defined for proper arrays only")
    fbar = R.f.reversion()
    # A(t) = t / fbar(t)
    A = TruncatedSeries.one(fbar.order - 1) / fbar.divide_by_x(1)
    # Z(t) = (1 - 1/g(fbar(t))) / fbar(t)
    numer = (1 - 1 / R.g.compose(fbar)).divide_by_x(1)
    Z = numer / fbar.divide_by_x(1)
    return ProductionData(A=A, Z=Z)


def replay_rows(production, rows):
    """Rebuild the leading ``rows`` rows from the A/Z recurrence."""
    A, Z = production.A, production.Z
    if rows - 1 > min(A.order, Z.order) + 1:
        raise InsufficientOrder("A/Z sequences too short for the requested rows")
    table = [[1]]
    for n in range(rows - 1):
        prev = table[-1]
        width = len(prev)
        new = [sum(Z[j] * prev[j] for j in range(width))]
        for k in range(width):
            new.append(sum(A[j] * prev[k + j] for j in range(width - k)))
        table.append(new)
    return ExactMatrix([row + [0] * (rows - len(row)) for row in table])


def left_product_matrix(R, rows, cols=None):
    """Window of the matrix with columns ``g, f, x*f, x**2*f, ...``."""
    cols = rows if cols is None else cols
    R._need(rows - 1)
    g, f = R.g, R.f

    def entry(i, j):
        if j == 0:
            return g[i]
        return f[i - j + 1] if i - j + 1 >= 0 else 0

    return ExactMatrix.from_function(rows, cols, entry)


def bordered(M):
    """``diag(1, M)``."""
    n, m = M.shape
    return ExactMatrix.from_function(
        n + 1, m + 1, lambda i, j: int(i == j == 0) if (i == 0 or j == 0) else M[i - 1, j - 1]
    )


def left_product_decompose(R, size):
    """Return ``(R^L, diag(1, R))`` windows whose product is the ``size x size`` window of ``R``.

    The left factor is ``size x (size + 1)`` and the right one ``(size + 1) x size``:
    when ``f(0) != 0`` the column of ``R^L`` just past the square window still
    touches the last row, so truncating both to ``size x size`` would drop a term.
    """
    left = left_product_matrix(R, size, size + 1)
    right = bordered(R.window(size, size)).window(size + 1, size)
    return left, right


# named constructors ------------------------------------------------------


def _s(num, den, order):
    return TruncatedSeries.rational(num, den, order)


def identity(order=DEFAULT_ORDER):
    return RiordanArray(TruncatedSeries.one(order), TruncatedSeries.x(order), "I")


def toeplitz(g):
    """``T(g) = R(g, x)``."""
    return RiordanArray(g, TruncatedSeries.x(g.order), "T")


def pascal_square(order=DEFAULT_ORDER):
    return RiordanArray(_s([1], [1, -1], order), _s([1], [1, -1], order), "P")


def pascal_triangle(order=DEFAULT_ORDER):
    return RiordanArray(_s([1], [1, -1], order), _s([0, 1], [1, -1], order), "p-hat")


def lattice_square(m, order=DEFAULT_ORDER):
    """``L^(m) = R((1 + (m-1)x)/(1-x), (1+x)/(1-x))``."""
    return RiordanArray(_s([1, m - 1], [1, -1], order), _s([1, 1], [1, -1], order), f"L({m})")


def lattice_triangle(m, order=DEFAULT_ORDER):
    """Lower triangular companion ``[L^(m)(n-k, k)]``."""
    return RiordanArray(_s([1, m - 1], [1, -1], order), _s([0, 1, 1], [1, -1], order), f"L({m})-hat")


def S_matrix(order=DEFAULT_ORDER):
    return RiordanArray(TruncatedSeries.one(order), _s([1, 1], [1, -1], order), "S")


def s_triangle(order=DEFAULT_ORDER):
    return RiordanArray(TruncatedSeries.one(order), _s([0, 1, 1], [1, -1], order), "s-hat")


def C_matrix(order=DEFAULT_ORDER):
    return RiordanArray(_s([1, 1], [1, -1], order), _s([1, 1], [1, -1], order), "C")


def c_triangle(order=DEFAULT_ORDER):
    return RiordanArray(_s([1, 1], [1, -1], order), _s([0, 1, 1], [1, -1], order), "c-hat")


def D_matrix(order=DEFAULT_ORDER):
    return RiordanArray(_s([1], [1, -1], order), _s([1, 1], [1, -1], order), "D")


def d_triangle(order=DEFAULT_ORDER):
    return RiordanArray(_s([1], [1, -1], order), _s([0, 1, 1], [1, -1], order), "d-hat")


def J_matrix(order=DEFAULT_ORDER):
    """All-ones lower triangle ``R(1/(1-x), x)``."""
    return RiordanArray(_s([1], [1, -1], order), TruncatedSeries.x(order), "J")


def L_S(order=DEFAULT_ORDER):
    """``[binom(n-1, k-1)] = R(1, x/(1-x))``."""
    return RiordanArray(TruncatedSeries.one(order), _s([0, 1], [1, -1], order), "L_S")


def L_C(order=DEFAULT_ORDER):
    """``[binom(n, k) + binom(n-1, k)] = R((1+x)/(1-x), x/(1-x))``."""
    return RiordanArray(_s([1, 1], [1, -1], order), _s([0, 1], [1, -1], order), "L_C")


def xi_toeplitz(order=DEFAULT_ORDER):
    """Toeplitz matrix of ``1, 2, 2, 2, ...``."""
    return toeplitz(_s([1, 1], [1, -1], order))


def schroder_series(order=DEFAULT_ORDER):
    """``r(x) = (1 - x - sqrt(1 - 6x + x^2)) / (2x)``, large Schroder numbers."""
    root = TruncatedSeries([1, -6, 1], order + 1).sqrt()
    return ((1 - TruncatedSeries.x(order + 1) - root) / 2).divide_by_x(1)


def c_triangle_inverse_closed_form(order=DEFAULT_ORDER):
    """``R(r(-x), x*r(-x))``."""
    r = schroder_series(order)
    r_neg = TruncatedSeries([(-1) ** n * c for n, c in enumerate(r.coeffs)], order)
    return RiordanArray(r_neg, r_neg.shift(1).truncate(order), "c-hat^-1")


NAMED = {
    "S": S_matrix,
    "C": C_matrix,
    "D": D_matrix,
    "s-hat": s_triangle,
    "c-hat": c_triangle,
    "d-hat": d_triangle,
    "P": pascal_square,
    "p-hat": pascal_triangle,
    "J": J_matrix,
    "L_S": L_S,
    "L_C": L_C,
    "T(xi)": xi_toeplitz,
}


# LDU ---------------------------------------------------------------------


def two_power_diagonal(size):
    """``diag(1, 2, 4, ..., 2**(size-1))``."""
    return ExactMatrix.diagonal([2**i for i in range(size)])


def ldu_factors(which, size):
    """``(L, diag(2**i), p-hat^T)`` windows with ``L @ diag @ p-hat^T`` equal to the S or C window."""
    if which == "S":
        lower = L_S(size)
    elif which == "C":
        lower = L_C(size)
    else:
        raise ValueError(f"LDU factors are available for 'S' and 'C', not {which!r}")
    return (
        lower.window(size),
        two_power_diagonal(size),
        pascal_triangle(size).window(size).transpose(),
    )
