"""Partial sums of 1/n^2 and 1/(2n+1)^2 with two-sided tail enclosures.

Tails are bounded by the integral test (full series) and by telescoping
(odd series).  Partial sums are exactly rounded (``math.fsum``) and every
enclosure is widened outward by ``SLOP * |S|`` to absorb the rounding of the
individual terms and tail bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SLOP",
    "Enclosure",
    "sum_reciprocal_squares",
    "sum_odd_reciprocal_squares",
    "odd_to_full_relation",
]

SLOP = 1e-15


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] that contains the limit by construction."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty enclosure [{self.lo!r}, {self.hi!r}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def scale(self, factor: float) -> "Enclosure":
        """Endpoint-wise product with a positive factor, widened by one ulp each way."""
        if not factor > 0:
            raise ValueError("factor must be positive")
        return Enclosure(
            math.nextafter(self.lo * factor, -math.inf), math.nextafter(self.hi * factor, math.inf)
        )

    def overlaps(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Enclosure") -> "Enclosure":
        if not self.overlaps(other):
            raise ValueError("enclosures are disjoint")
        return Enclosure(max(self.lo, other.lo), min(self.hi, other.hi))


def _enclose(partial: float, tail_lo: float, tail_hi: float) -> Enclosure:
    slop = SLOP * abs(partial + tail_hi)
    return Enclosure(partial + tail_lo - slop, partial + tail_hi + slop)


def _check_n(N: int) -> int:
    if int(N) != N or N < 1:
        raise ValueError(f"N must be an integer >= 1, got {N!r}")
    return int(N)


def sum_reciprocal_squares(N: int) -> Enclosure:
    """Enclose sum_{n>=1} 1/n^2 by [S_N + 1/(N+1), S_N + 1/N]."""
    N = _check_n(N)
    n = np.arange(1, N + 1, dtype=np.float64)
    partial = math.fsum((1.0 / (n * n)).tolist())
    return _enclose(partial, 1.0 / (N + 1), 1.0 / N)


def sum_odd_reciprocal_squares(N: int) -> Enclosure:
    """Enclose sum_{n>=0} 1/(2n+1)^2 from its first N terms.

    The tail over n >= N lies between 1/(2(2N+1)) and 1/(4N), from
    1/((2n+1)(2n+3)) < 1/(2n+1)^2 < 1/(2n(2n+2)).
    """
    N = _check_n(N)
    m = 2.0 * np.arange(N, dtype=np.float64) + 1.0
    partial = math.fsum((1.0 / (m * m)).tolist())
    return _enclose(partial, 1.0 / (2.0 * (2 * N + 1)), 1.0 / (4.0 * N))


def odd_to_full_relation(N: int) -> tuple[Enclosure, Enclosure]:
    """Return the odd-series enclosure and 3/4 of the full-series enclosure.

    Both contain pi^2/8, so they must overlap.
    """
    return sum_odd_reciprocal_squares(N), sum_reciprocal_squares(N).scale(0.75)
