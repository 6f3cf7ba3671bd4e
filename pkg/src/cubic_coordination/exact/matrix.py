"""Dense matrices of exact scalars, minors and fraction-free determinants."""

from fractions import Fraction
from itertools import combinations
from math import lcm

from ..errors import BadIndexSet, NotSquare
from .series import normalize


class ExactMatrix:
    """Immutable row-major matrix of ints/Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        data = [[normalize(x) for x in row] for row in data]
        ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged matrix")
        self._data = tuple(tuple(row) for row in data)
        self.rows = len(self._data)
        self.cols = ncols

    @classmethod
    def from_function(cls, rows, cols, fn):
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def zeros(cls, rows, cols):
        return cls.from_function(rows, cols, lambda i, j: 0)

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls.from_function(n, n, lambda i, j: values[i] if i == j else 0)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "\n ".join(" ".join(f"{x!s:>6}" for x in row) for row in self._data)
        return f"ExactMatrix({self.rows}x{self.cols})\n {body}"

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def transpose(self):
        return ExactMatrix([list(self.column(j)) for j in range(self.cols)])

    T = property(transpose)

    def window(self, rows, cols=None):
        """Leading ``rows x cols`` block."""
        cols = rows if cols is None else cols
        if rows > self.rows or cols > self.cols:
            raise IndexError("window larger than matrix")
        return ExactMatrix([r[:cols] for r in self._data[:rows]])

    def submatrix(self, row_idx, col_idx):
        return ExactMatrix([[self._data[i][j] for j in col_idx] for i in row_idx])

    def is_lower_triangular(self):
        return all(self._data[i][j] == 0 for i in range(self.rows) for j in range(i + 1, self.cols))

    def det(self):
        return det_fraction_free(self)

    def minor(self, row_idx, col_idx):
        return minor(self, row_idx, col_idx)


def _bareiss(a):
    """Determinant of a square list-of-lists integer matrix (consumed)."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                rowi[j] = (pivot * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_fraction_free(m):
    """Exact determinant via single-division (Bareiss) elimination.

    Rational entries are cleared row by row first; the scaling is divided
    out at the end, so integer input gives an ``int``.
    """
    if isinstance(m, ExactMatrix):
        if m.rows != m.cols:
            raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
        data = m.tolist()
    else:
        data = [list(r) for r in m]
        if any(len(r) != len(data) for r in data):
            raise NotSquare("determinant of a non-square matrix")
    scale = 1
    rows = []
    for row in data:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        if den != 1:
            scale *= den
            row = [int(x * den) for x in row]
        rows.append(row)
    d = _bareiss(rows)
    return normalize(Fraction(d, scale)) if scale != 1 else d


def _check_index_set(idx, bound):
    idx = list(idx)
    if any(not (0 <= i < bound) for i in idx):
        raise BadIndexSet(f"index out of range 0..{bound - 1}: {idx}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise BadIndexSet(f"indices must be strictly increasing: {idx}")
    return idx


def minor(m, row_idx, col_idx):
    """Determinant of the submatrix on the given (strictly increasing) rows/cols."""
    row_idx = _check_index_set(row_idx, m.rows)
    col_idx = _check_index_set(col_idx, m.cols)
    if len(row_idx) != len(col_idx):
        raise BadIndexSet("row and column index sets differ in length")
    data = m._data
    return det_fraction_free([[data[i][j] for j in col_idx] for i in row_idx])


def cauchy_binet(a, b, row_idx, col_idx):
    """Minor of ``a @ b`` expanded as a sum over middle index sets."""
    k = len(row_idx)
    return sum(
        minor(a, row_idx, mid) * minor(b, mid, col_idx) for mid in combinations(range(a.cols), k)
    )
