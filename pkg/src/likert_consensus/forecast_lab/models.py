"""AR / ARX models with AIC lag selection and the iterated one-step backtest.

The ARX regressor enters with ``exog_lag`` periods of delay (default 1, i.e.
``x_{t-1}`` explains ``y_t``), so the proxy needed for a forecast is already
published at the forecast origin.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import (HistoryTooShort, MissingExog, NonPositiveSSR, RankDeficient,
                      TooShort)
from .accuracy import mapfe
from .ols import aic, ols_fit
from .proxy import ScaledProxySeries
from .series import TimeSeries, format_month

log = logging.getLogger(__name__)

DEFAULT_MAX_LAG = 12
DEFAULT_HORIZON = 12
EXOG_TIMINGS = {"lagged": 1, "contemporaneous": 0}


@dataclass(frozen=True)
class ModelFit:
    lag_order: int
    intercept: float
    ar_coefs: tuple[float, ...]
    exog_coef: float | None
    ssr: float
    n_obs: int
    aic: float
    exog_lag: int = 1
    warnings: tuple[str, ...] = field(default=())

    @property
    def n_coefficients(self) -> int:
        return 1 + self.lag_order + (self.exog_coef is not None)


@dataclass(frozen=True)
class BacktestReport:
    model_name: str
    forecasts: TimeSeries
    actuals: TimeSeries
    mapfe: float
    per_period_lag_orders: tuple[int, ...]

    @property
    def errors(self) -> TimeSeries:
        return TimeSeries(self.actuals.start, self.actuals.values - self.forecasts.values)


def _exog_series(exog) -> TimeSeries | None:
    if exog is None:
        return None
    return exog.series if isinstance(exog, ScaledProxySeries) else exog


def _sample_bounds(y: TimeSeries, x: TimeSeries | None, max_lag: int, exog_lag: int) -> tuple[int, int]:
    """First and last index of ``y`` usable by every candidate order (inclusive)."""
    i0, i1 = max_lag, len(y) - 1
    if x is not None:
        i0 = max(i0, x.start + exog_lag - y.start)
        i1 = min(i1, x.end - 1 + exog_lag - y.start)
    return i0, i1


def _design(v: np.ndarray, rows: np.ndarray, p: int, xcol: np.ndarray | None) -> np.ndarray:
    cols = [np.ones(rows.size)] + [v[rows - j] for j in range(1, p + 1)]
    if xcol is not None:
        cols.append(xcol)
    return np.column_stack(cols)


def select_and_fit(y: TimeSeries, exog=None, max_lag: int = DEFAULT_MAX_LAG, *,
                   exog_lag: int = 1, orders: Sequence[int] | None = None) -> ModelFit:
    """Fit orders ``1..max_lag`` on a common sample and keep the lowest AIC.

    Ties go to the smaller order. An exact fit (zero SSR) counts as the
    minimal AIC. Rank-deficient candidates are skipped; if every candidate is
    rank deficient the minimum-norm order-1 fit is returned.
    """
    if max_lag < 1:
        raise ValueError("max_lag must be >= 1")
    orders = list(range(1, max_lag + 1)) if orders is None else sorted(orders)
    if not orders or orders[0] < 1 or orders[-1] > max_lag:
        raise ValueError(f"orders must lie in 1..{max_lag}")
    x = _exog_series(exog)
    if len(y) < 2 * max_lag + 2:
        raise TooShort(f"{len(y)} observations; lag selection up to {max_lag} needs {2 * max_lag + 2}")
    i0, i1 = _sample_bounds(y, x, max_lag, exog_lag)
    k_max = 1 + orders[-1] + (x is not None)
    n_obs = i1 - i0 + 1
    if n_obs <= k_max:
        raise TooShort(f"common estimation sample has {max(n_obs, 0)} observations "
                       f"for {k_max} coefficients")
    rows = np.arange(i0, i1 + 1)
    v = y.values
    target = v[rows]
    xcol = None
    if x is not None:
        xcol = x.values[y.start + rows - exog_lag - x.start]

    best = None
    notes = []
    for p in orders:
        X = _design(v, rows, p, xcol)
        try:
            res = ols_fit(target, X)
        except RankDeficient:
            notes.append(f"order {p} skipped: rank deficient")
            continue
        k = X.shape[1]
        try:
            score = aic(res.ssr, n_obs, k)
        except NonPositiveSSR:
            score = -math.inf
            notes.append(f"order {p}: exact fit")
        if best is None or score < best[0]:
            best = (score, p, res)
    if best is None:
        p = orders[0]
        res = ols_fit(target, _design(v, rows, p, xcol), allow_rank_deficient=True)
        best = (-math.inf if res.ssr <= 0 else aic(res.ssr, n_obs, 1 + p + (x is not None)), p, res)
        notes.append(f"all orders rank deficient; minimum-norm fit at order {p}")
        log.warning("all candidate orders rank deficient for series ending %s", y.last_label)

    score, p, res = best
    c = res.coefficients
    return ModelFit(
        lag_order=p,
        intercept=float(c[0]),
        ar_coefs=tuple(float(a) for a in c[1:p + 1]),
        exog_coef=float(c[p + 1]) if x is not None else None,
        ssr=res.ssr,
        n_obs=n_obs,
        aic=score,
        exog_lag=exog_lag,
        warnings=tuple(notes),
    )


def one_step_forecast(fit: ModelFit, history: TimeSeries, exog=None) -> float:
    """Forecast the month right after ``history``."""
    p = fit.lag_order
    if len(history) < p:
        raise HistoryTooShort(f"order {p} needs {p} values, history has {len(history)}")
    recent = history.values[::-1][:p]
    value = fit.intercept + math.fsum(a * b for a, b in zip(fit.ar_coefs, recent))
    if fit.exog_coef is not None:
        x = _exog_series(exog)
        when = history.end - fit.exog_lag
        if x is None or not x.has(when):
            raise MissingExog(f"no exogenous value dated {format_month(when)}")
        value += fit.exog_coef * x.at(when)
    return value


def iterated_backtest(y: TimeSeries, exog=None, horizon: int = DEFAULT_HORIZON,
                      max_lag: int = DEFAULT_MAX_LAG, *, exog_lag: int = 1,
                      reselect: bool = True, model_name: str | None = None) -> BacktestReport:
    """One-step forecasts for each of the last ``horizon`` months on an expanding window.

    Each forecast uses only data dated before its target month (the proxy is
    cut at ``target - exog_lag``). With ``reselect=False`` the order chosen
    at the first origin is kept and only the coefficients are re-estimated.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if len(y) <= horizon:
        raise TooShort(f"series of {len(y)} months cannot hold a {horizon}-month backtest")
    x = _exog_series(exog)
    forecasts, orders = [], []
    fixed = None
    for target in range(y.end - horizon, y.end):
        history = y.upto(target - 1)
        xs = x.upto(target - exog_lag) if x is not None else None
        fit = select_and_fit(history, xs, max_lag, exog_lag=exog_lag,
                             orders=None if fixed is None else [fixed])
        if not reselect and fixed is None:
            fixed = fit.lag_order
        forecasts.append(one_step_forecast(fit, history, xs))
        orders.append(fit.lag_order)
    fc = TimeSeries(y.end - horizon, np.array(forecasts))
    actual = y.window(y.end - horizon)
    name = model_name or ("AR" if x is None else "ARX")
    return BacktestReport(name, fc, actual, mapfe(actual, fc), tuple(orders))
