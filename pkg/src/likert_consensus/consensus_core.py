"""Geometric consensus for Likert response distributions.

A distribution of N reply shares (in percent, summing to 100) is a point on
the (N-1)-simplex. Consensus is the distance from that point to the
barycentre (all shares equal to 100/N), expressed as a percentage of the
barycentre-to-vertex distance. It is 0 for an equidistributed reply and 100
when a single category takes every response.

Category order is fixed: ``(PP, P, E, M, MM)`` for five options and
``(P, E, M)`` for three. The metric itself is order invariant, so the order
only matters for plotting.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionTooSmall, EmptyInput, NegativeShare, SumOutOfTolerance

DEFAULT_SUM_TOLERANCE = 0.5
FIVE_LABELS = ("pp", "p", "e", "m", "mm")
THREE_LABELS = ("p", "e", "m")


@dataclass(frozen=True)
class SurveyDistribution:
    """Validated reply shares in percent. Build with :func:`validate_distribution`."""

    shares: tuple[float, ...]

    @property
    def n_categories(self) -> int:
        return len(self.shares)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.shares, dtype=float)


@dataclass(frozen=True)
class FiveCategoryShares:
    pp: float
    p: float
    e: float
    m: float
    mm: float
    dk: float = 0.0

    def __post_init__(self):
        validate_five(self)

    def substantive(self) -> SurveyDistribution:
        """The five answer categories with the "do not know" share removed, rescaled to 100."""
        raw = np.array([self.pp, self.p, self.e, self.m, self.mm], dtype=float)
        total = raw.sum()
        if total <= 0:
            raise EmptyInput("all substantive shares are zero")
        return SurveyDistribution(tuple(float(v) for v in raw * (100.0 / total)))


@dataclass(frozen=True)
class BarycentricPoint:
    x: float
    y: float


def validate_distribution(raw_shares: Sequence[float],
                          sum_tolerance: float = DEFAULT_SUM_TOLERANCE) -> SurveyDistribution:
    """Check non-negativity and the sum, then rescale so the shares add to exactly 100.

    Raises
    ------
    EmptyInput, NegativeShare, SumOutOfTolerance
    """
    if sum_tolerance < 0:
        raise ValueError("sum_tolerance must be non-negative")
    values = [float(v) for v in raw_shares]
    if not values:
        raise EmptyInput("no shares given")
    for i, v in enumerate(values):
        if not math.isfinite(v):
            raise NegativeShare(f"share {i} is not finite ({v})")
        if v < 0:
            raise NegativeShare(f"share {i} is negative ({v})")
    total = math.fsum(values)
    if abs(total - 100.0) > sum_tolerance:
        raise SumOutOfTolerance(f"shares sum to {total}, not 100 +/- {sum_tolerance}")
    if total == 100.0:
        return SurveyDistribution(tuple(values))
    scale = 100.0 / total
    return SurveyDistribution(tuple(v * scale for v in values))


def validate_five(five: FiveCategoryShares, sum_tolerance: float = DEFAULT_SUM_TOLERANCE) -> None:
    values = (five.pp, five.p, five.e, five.m, five.mm, five.dk)
    for name, v in zip(FIVE_LABELS + ("dk",), values):
        if not math.isfinite(v) or v < 0:
            raise NegativeShare(f"share {name!r} is negative or not finite ({v})")
    total = math.fsum(values)
    if abs(total - 100.0) > sum_tolerance:
        raise SumOutOfTolerance(f"five-option shares plus dk sum to {total}, not 100 +/- {sum_tolerance}")


def make_five(pp, p, e, m, mm, dk=0.0, sum_tolerance: float = DEFAULT_SUM_TOLERANCE) -> FiveCategoryShares:
    """Validate raw five-option shares against ``sum_tolerance`` and renormalize all six to 100."""
    raw = [pp, p, e, m, mm, dk]
    dist = validate_distribution(raw, sum_tolerance)
    return FiveCategoryShares(*dist.shares)


def consensus(dist: SurveyDistribution) -> float:
    """Consensus in percent, from 0 (equidistributed) to 100 (one category holds everything).

    ``sqrt(sum_i (R_i - 100/N)**2) / sqrt((N - 1)/N)``.
    """
    r = dist.as_array()
    n = r.size
    if n < 2:
        raise DimensionTooSmall("consensus needs at least two categories")
    dev = r - 100.0 / n
    value = math.sqrt(math.fsum(dev * dev)) / math.sqrt((n - 1) / n)
    return min(max(value, 0.0), 100.0)


def group_five_to_three(five: FiveCategoryShares) -> SurveyDistribution:
    """Collapse to (increase, no change, decrease); "do not know" joins the neutral share."""
    p = five.pp + five.p
    e = five.e + five.dk
    m = five.m + five.mm
    total = p + e + m
    scale = 100.0 / total
    return SurveyDistribution((p * scale, e * scale, m * scale))


def polygon_vertices(n: int) -> np.ndarray:
    """Regular n-gon on the unit circle, first vertex at the top, counterclockwise."""
    angles = np.pi / 2 + 2 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(angles), np.sin(angles)])


def barycentric_coordinates(dist: SurveyDistribution) -> BarycentricPoint:
    """2-D plotting position of a distribution inside the regular N-gon.

    Only for drawing. Planar distances between these points are not
    consensus values.
    """
    n = dist.n_categories
    if n < 3:
        raise DimensionTooSmall("a planar embedding needs at least three categories")
    w = dist.as_array() / 100.0
    x, y = w @ polygon_vertices(n)
    return BarycentricPoint(float(x), float(y))
