from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class RationalInterval:
    """Closed rational interval ``[lo, hi]`` with ``lo <= hi``.

    Root enclosures produced by the isolation code are read as the half-open
    ``(lo, hi]`` when ``lo < hi``; a degenerate interval is an exact root.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, x):
        return self.lo <= x <= self.hi

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __float__(self):
        return float(self.midpoint)
