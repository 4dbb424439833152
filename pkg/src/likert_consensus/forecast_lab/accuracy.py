"""Forecast accuracy: MAPFE and the Diebold-Mariano test with a Newey-West variance."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..errors import BandwidthTooLarge, NonPositiveActual, TooShort
from .series import TimeSeries, require_aligned

LOSSES = ("ape", "ae", "se")


@dataclass(frozen=True)
class DmResult:
    """Positive ``statistic`` means the candidate (second) model has the smaller losses.

    ``degenerate`` marks a zero long-run variance. The statistic is then 0 if
    the mean loss differential is 0 and +/-inf otherwise.
    """

    statistic: float
    p_value: float
    loss_name: str
    bandwidth: int
    degenerate: bool
    mean_differential: float = 0.0
    n: int = 0
    harvey: bool = False

    def significant(self, level: float = 0.05) -> bool:
        return self.p_value < level


def mapfe(actuals: TimeSeries, forecasts: TimeSeries) -> float:
    """Mean absolute percentage forecast error, in percent."""
    require_aligned(actuals, forecasts)
    a, f = actuals.values, forecasts.values
    if a.size == 0:
        raise TooShort("no periods to evaluate")
    if np.any(a <= 0):
        raise NonPositiveActual("MAPFE needs strictly positive actuals")
    return 100.0 * float(np.mean(np.abs(a - f) / a))


def cube_root_bandwidth(n: int) -> int:
    """``floor(n ** (1/3))`` computed in integers (12 -> 2, 64 -> 4)."""
    b = int(round(n ** (1.0 / 3.0)))
    while b ** 3 > n:
        b -= 1
    while (b + 1) ** 3 <= n:
        b += 1
    return b


def newey_west_lrv(d, bandwidth: int) -> float:
    """Bartlett-weighted long-run variance with 1/n autocovariances."""
    d = np.asarray(d, dtype=float)
    n = d.size
    if n < 2:
        raise TooShort("need at least two observations")
    if not 0 <= bandwidth < n:
        raise BandwidthTooLarge(f"bandwidth {bandwidth} not in [0, {n})")
    e = d - d.mean()
    lrv = float(e @ e) / n
    for j in range(1, bandwidth + 1):
        gamma = float(e[j:] @ e[:-j]) / n
        lrv += 2.0 * (1.0 - j / (bandwidth + 1)) * gamma
    # Bartlett weights keep this non-negative up to rounding
    assert lrv > -1e-12 * max(1.0, float(e @ e) / n), lrv
    return max(lrv, 0.0)


def loss(errors: np.ndarray, actuals: np.ndarray, name: str) -> np.ndarray:
    if name == "ape":
        if np.any(actuals <= 0):
            raise NonPositiveActual("percentage loss needs strictly positive actuals")
        return 100.0 * np.abs(errors) / actuals
    if name == "ae":
        return np.abs(errors)
    if name == "se":
        return errors ** 2
    raise ValueError(f"loss must be one of {LOSSES}")


def dm_test(errors_benchmark: TimeSeries, errors_candidate: TimeSeries, actuals: TimeSeries,
            bandwidth: int | None = None, loss_name: str = "ape", harvey: bool = False) -> DmResult:
    """Diebold-Mariano test of equal expected loss, benchmark first.

    ``bandwidth=None`` uses ``floor(n ** (1/3))``. ``harvey=True`` applies the
    one-step small-sample factor ``sqrt((n - 1)/n)`` and a Student-t(n-1)
    reference; it is off by default.
    """
    require_aligned(errors_benchmark, errors_candidate)
    require_aligned(errors_benchmark, actuals)
    n = len(actuals)
    if n < 2:
        raise TooShort("need at least two periods")
    if bandwidth is None:
        bandwidth = cube_root_bandwidth(n)
    a = actuals.values
    d = loss(errors_benchmark.values, a, loss_name) - loss(errors_candidate.values, a, loss_name)
    dbar = float(np.mean(d))
    lrv = newey_west_lrv(d, bandwidth)
    if lrv == 0.0:
        if dbar == 0.0:
            return DmResult(0.0, 1.0, loss_name, bandwidth, True, dbar, n, harvey)
        return DmResult(math.copysign(math.inf, dbar), 0.0, loss_name, bandwidth, True, dbar, n, harvey)
    stat = dbar / math.sqrt(lrv / n)
    if harvey:
        stat *= math.sqrt((n - 1) / n)
        p = 2.0 * float(stats.t.sf(abs(stat), df=n - 1))
    else:
        p = 2.0 * float(stats.norm.sf(abs(stat)))
    return DmResult(stat, min(p, 1.0), loss_name, bandwidth, False, dbar, n, harvey)
