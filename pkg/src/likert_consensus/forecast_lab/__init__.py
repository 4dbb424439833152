"""Consensus-based proxies, AR/ARX lag selection, backtests and accuracy tests."""
from .accuracy import DmResult, cube_root_bandwidth, dm_test, mapfe, newey_west_lrv
from .models import (EXOG_TIMINGS, BacktestReport, ModelFit, iterated_backtest,
                     one_step_forecast, select_and_fit)
from .ols import OlsResult, aic, ols_fit
from .proxy import ScaledProxySeries, moving_average, rolling_scale
from .series import TimeSeries, format_month, parse_month

__all__ = [
    "BacktestReport", "DmResult", "EXOG_TIMINGS", "ModelFit", "OlsResult", "ScaledProxySeries",
    "TimeSeries", "aic", "cube_root_bandwidth", "dm_test", "format_month", "iterated_backtest",
    "mapfe", "moving_average", "newey_west_lrv", "ols_fit", "one_step_forecast", "parse_month",
    "rolling_scale", "select_and_fit",
]
