"""Turn a consensus series into a proxy in the units of the target rate.

Smoothing is a trailing moving average; scaling regresses the target on the
smoothed consensus over a trailing window and evaluates the fitted line at the
window's last date. Both steps are causal: the value dated t uses nothing
dated after t.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import InsufficientOverlap, RankDeficient, ValidationError, WindowNotPositive, WindowTooLarge
from .ols import ols_fit
from .series import TimeSeries, format_month, overlap

log = logging.getLogger(__name__)

DEFAULT_SMOOTHING_WINDOW = 3
DEFAULT_SCALING_WINDOW = 24


@dataclass(frozen=True)
class ScaledProxySeries:
    series: TimeSeries
    smoothing_window: int
    scaling_window: int
    # months whose window had constant consensus and fell back to the window mean
    degenerate_windows: tuple[str, ...] = field(default=())


def moving_average(series: TimeSeries, window: int) -> TimeSeries:
    if window < 1:
        raise WindowNotPositive(f"window must be >= 1, got {window}")
    if window > len(series):
        raise WindowTooLarge(f"window {window} exceeds series length {len(series)}")
    v = series.values
    out = np.array([v[i - window + 1: i + 1].mean() for i in range(window - 1, v.size)])
    return TimeSeries(series.start + window - 1, out)


def rolling_scale(smoothed_consensus: TimeSeries, target: TimeSeries, window: int,
                  smoothing_window: int = 0) -> ScaledProxySeries:
    """Rolling OLS of ``target`` on ``(1, consensus)``; emits ``a_t + b_t * consensus_t``.

    A window in which consensus is constant is fit with an intercept only, so
    the emitted value is the window mean of the target; those months are
    listed in ``degenerate_windows`` and logged.
    """
    if window < 3:
        raise ValidationError(f"scaling window must be >= 3, got {window}")
    lo, hi = overlap(smoothed_consensus, target)
    if hi - lo + 1 < window:
        raise InsufficientOverlap(
            f"{max(hi - lo + 1, 0)} overlapping months, scaling window needs {window}")
    c = smoothed_consensus.window(lo, hi).values
    y = target.window(lo, hi).values
    out = np.empty(c.size - window + 1)
    degenerate = []
    for j, end in enumerate(range(window - 1, c.size)):
        cw = c[end - window + 1: end + 1]
        yw = y[end - window + 1: end + 1]
        if np.ptp(cw) > 0.0:
            try:
                coef = ols_fit(yw, np.column_stack([np.ones(window), cw])).coefficients
            except RankDeficient:
                pass
            else:
                out[j] = coef[0] + coef[1] * cw[-1]
                continue
        out[j] = yw.mean()
        degenerate.append(format_month(lo + end))
    if degenerate:
        log.warning("constant consensus in %d scaling window(s); used target mean for %s",
                    len(degenerate), ", ".join(degenerate))
    return ScaledProxySeries(TimeSeries(lo + window - 1, out), smoothing_window, window,
                             tuple(degenerate))
