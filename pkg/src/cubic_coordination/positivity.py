"""Total positivity checks on finite windows.

``check_tp_window`` is exhaustive over minors up to a given order and so is
exponential in the window size. STP and LSTP use the corner-minor criteria,
which need only polynomially many minors. Every verdict is about the window
supplied, never about the infinite matrix.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import NotLowerTriangular, NotSquare
from .exact import ExactMatrix, minor

TP_PASS = "TP-pass"
STP_PASS = "STP-pass"
LSTP_PASS = "LSTP-pass"
FAIL = "fail"


@dataclass(frozen=True)
class Witness:
    rows: tuple
    cols: tuple
    value: int


@dataclass(frozen=True)
class TPReport:
    window_size: tuple
    max_minor_order: int
    verdict: str
    minors_checked: int
    witness: Witness = None

    @property
    def passed(self):
        return self.verdict != FAIL


def _report(M, order, verdict, checked, witness=None):
    return TPReport(
        window_size=M.shape,
        max_minor_order=order,
        verdict=verdict,
        minors_checked=checked,
        witness=witness,
    )


def check_tp_window(M, max_order):
    """All minors of order ``<= max_order`` must be nonnegative.

    Minors are visited by order, then lexicographically, so the reported
    witness is the first negative minor in that order.
    """
    if max_order > min(M.rows, M.cols):
        raise ValueError(f"max_order {max_order} exceeds window {M.shape}")
    checked = 0
    for k in range(1, max_order + 1):
        for rows in combinations(range(M.rows), k):
            for cols in combinations(range(M.cols), k):
                v = minor(M, rows, cols)
                checked += 1
                if v < 0:
                    return _report(M, max_order, FAIL, checked, Witness(rows, cols, v))
    return _report(M, max_order, TP_PASS, checked)


def corner_minor_index_sets(size):
    """Row- and column-initial contiguous index sets of the STP corner criterion."""
    m = size - 1
    for k in range(m + 1):
        first = tuple(range(k + 1))
        for i in range(m - k + 1):
            block = tuple(range(i, i + k + 1))
            yield block, first
            if i:
                yield first, block


def check_stp_window(M):
    """Strict positivity of ``M(i..i+k; 0..k)`` and ``M(0..k; i..i+k)`` for all admissible ``i, k``.

    By the classical corner criterion this suffices for every minor of the
    square window to be positive. TP is not re-checked here.
    """
    if M.rows != M.cols:
        raise NotSquare("STP corner criterion needs a square window")
    checked = 0
    for rows, cols in corner_minor_index_sets(M.rows):
        v = minor(M, rows, cols)
        checked += 1
        if v <= 0:
            return _report(M, M.rows, FAIL, checked, Witness(rows, cols, v))
    return _report(M, M.rows, STP_PASS, checked)


def _dominating_index_sets(size, rng, samples):
    """Random index pairs with ``rows[l] >= cols[l]`` for every ``l``."""
    out = []
    while len(out) < samples:
        k = rng.randint(1, size)
        rows = sorted(rng.sample(range(size), k))
        cols = sorted(rng.sample(range(size), k))
        if all(r >= c for r, c in zip(rows, cols)):
            out.append((tuple(rows), tuple(cols)))
    return out


def check_lstp_window(M, samples=200, seed=0):
    """Lower strict total positivity of a lower-triangular window.

    Checks ``M(m-k..m; 0..k) > 0`` for each leading principal block of order
    ``m + 1`` and each ``k <= m``, then spot-checks ``samples`` random minors
    whose row indices dominate their column indices.
    """
    if M.rows != M.cols:
        raise NotSquare("LSTP criterion needs a square window")
    if not M.is_lower_triangular():
        raise NotLowerTriangular("LSTP is defined for lower-triangular matrices")
    size = M.rows
    checked = 0
    for m in range(size):
        for k in range(m + 1):
            rows = tuple(range(m - k, m + 1))
            cols = tuple(range(k + 1))
            v = minor(M, rows, cols)
            checked += 1
            if v <= 0:
                return _report(M, size, FAIL, checked, Witness(rows, cols, v))
    rng = random.Random(seed)
    for rows, cols in sorted(_dominating_index_sets(size, rng, samples)):
        v = minor(M, rows, cols)
        checked += 1
        if v <= 0:
            return _report(M, size, FAIL, checked, Witness(rows, cols, v))
    return _report(M, size, LSTP_PASS, checked)


def toeplitz_window(seq, size):
    """``[a_{i-j}]`` on a ``size x size`` window; entries past the prefix are zero."""
    seq = list(seq)

    def entry(i, j):
        d = i - j
        return seq[d] if 0 <= d < len(seq) else 0

    return ExactMatrix.from_function(size, size, entry)


def check_pf_sequence(seq, window_size, max_order):
    """Polya frequency test: TP of the Toeplitz window of ``seq``."""
    if window_size > len(seq):
        raise ValueError("window larger than the supplied prefix")
    return check_tp_window(toeplitz_window(seq, window_size), max_order)
