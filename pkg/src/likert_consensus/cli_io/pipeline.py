"""End-to-end run: survey + rates -> consensus -> proxies -> AR/ARX backtests -> DM tests."""
from __future__ import annotations

import contextlib
import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .. import __version__
from ..consensus_core import DEFAULT_SUM_TOLERANCE, consensus, group_five_to_three
from ..errors import ConsensusLabError, TooShort, ValidationError
from ..forecast_lab import (EXOG_TIMINGS, BacktestReport, DmResult, ScaledProxySeries, TimeSeries,
                            cube_root_bandwidth, dm_test, iterated_backtest, moving_average,
                            rolling_scale)
from ..forecast_lab.accuracy import LOSSES
from ..simplex_mc import RNG_ALGORITHM
from .ingest import SurveyPanel, parse_rates_csv, parse_survey_csv

log = logging.getLogger(__name__)

BENCHMARK = "AR"
CANDIDATES = {"ARX-SC3": "SC3", "ARX-SC5": "SC5"}


@dataclass(frozen=True)
class RunConfig:
    smoothing_window: int = 3
    scaling_window: int = 24
    max_lag: int = 12
    horizon: int = 12
    dm_bandwidth: int | None = None  # None: floor(horizon ** (1/3))
    exog_timing: str = "lagged"
    seed: int = 42
    sum_tolerance: float = DEFAULT_SUM_TOLERANCE
    loss: str = "ape"
    reselect_each_origin: bool = True
    harvey: bool = False

    def __post_init__(self):
        for name in ("smoothing_window", "scaling_window", "max_lag", "horizon"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be >= 1")
        if self.scaling_window < 3:
            raise ValidationError("scaling_window must be >= 3")
        if self.dm_bandwidth is not None and self.dm_bandwidth < 0:
            raise ValidationError("dm_bandwidth must be >= 0")
        if self.exog_timing not in EXOG_TIMINGS:
            raise ValidationError(f"exog_timing must be one of {sorted(EXOG_TIMINGS)}")
        if self.loss not in LOSSES:
            raise ValidationError(f"loss must be one of {LOSSES}")
        if self.sum_tolerance < 0 or self.seed < 0:
            raise ValidationError("sum_tolerance and seed must be non-negative")

    @property
    def bandwidth(self) -> int:
        return cube_root_bandwidth(self.horizon) if self.dm_bandwidth is None else self.dm_bandwidth

    @property
    def warm_up(self) -> int:
        return self.smoothing_window + self.scaling_window + self.max_lag + self.horizon


@dataclass
class ReportBundle:
    reports: dict[str, BacktestReport]
    dm: dict[str, DmResult]
    consensus: dict[str, TimeSeries]
    proxies: dict[str, ScaledProxySeries]
    shares: dict[str, TimeSeries]  # grouped three-option shares: increase / no_change / fall
    metadata: dict = field(default_factory=dict)


@contextlib.contextmanager
def stage(name: str):
    try:
        yield
    except ConsensusLabError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def consensus_series(panel: SurveyPanel) -> tuple[dict[str, TimeSeries], dict[str, TimeSeries]]:
    """C3 and C5 series plus the grouped three-option shares."""
    grouped = [group_five_to_three(row) for row in panel.rows]
    c3 = np.array([consensus(g) for g in grouped])
    c5 = np.array([consensus(row.substantive()) for row in panel.rows])
    g = np.array([d.shares for d in grouped]).reshape(len(grouped), 3)
    return (
        {"C3": TimeSeries(panel.start, c3), "C5": TimeSeries(panel.start, c5)},
        {"increase": TimeSeries(panel.start, g[:, 0]),
         "no_change": TimeSeries(panel.start, g[:, 1]),
         "fall": TimeSeries(panel.start, g[:, 2])},
    )


def run_pipeline(survey, rates, config: RunConfig | None = None) -> ReportBundle:
    """``survey``/``rates`` may be CSV paths or already-parsed objects.

    Errors are re-raised with ``exc.stage`` naming the step that failed.
    """
    config = config or RunConfig()
    with stage("parse-survey"):
        panel = survey if isinstance(survey, SurveyPanel) else parse_survey_csv(survey, config.sum_tolerance)
    with stage("parse-rates"):
        y_all = rates if isinstance(rates, TimeSeries) else parse_rates_csv(rates)
    with stage("consensus"):
        cons, shares = consensus_series(panel)
    with stage("align"):
        y = y_all.window(panel.start, panel.end - 1)
        if len(y) < config.warm_up:
            raise TooShort(f"{len(y)} overlapping months; smoothing + scaling + max_lag + horizon "
                           f"needs {config.warm_up}")
    proxies = {}
    for cname, pname in (("C3", "SC3"), ("C5", "SC5")):
        with stage(f"smooth:{cname}"):
            smoothed = moving_average(cons[cname], config.smoothing_window)
        with stage(f"scale:{pname}"):
            proxies[pname] = rolling_scale(smoothed, y, config.scaling_window, config.smoothing_window)

    exog_lag = EXOG_TIMINGS[config.exog_timing]
    if exog_lag == 0:
        log.warning("contemporaneous exog timing: the proxy dated t was scaled using the rate at t")
    reports = {}
    for name, pname in [(BENCHMARK, None)] + list(CANDIDATES.items()):
        with stage(f"backtest:{name}"):
            reports[name] = iterated_backtest(
                y, proxies[pname] if pname else None, config.horizon, config.max_lag,
                exog_lag=exog_lag, reselect=config.reselect_each_origin, model_name=name)
    dm = {}
    bench = reports[BENCHMARK]
    for name in CANDIDATES:
        with stage(f"dm:{name}"):
            dm[name] = dm_test(bench.errors, reports[name].errors, bench.actuals,
                               config.bandwidth, config.loss, config.harvey)

    metadata = {
        "artifact": "likert_consensus",
        "version": __version__,
        "rng_algorithm": RNG_ALGORITHM,
        "config": asdict(config),
        "dm_bandwidth_used": config.bandwidth,
        "survey_source": str(survey) if isinstance(survey, (str, Path)) else "<in-memory>",
        "rates_source": str(rates) if isinstance(rates, (str, Path)) else "<in-memory>",
        "sample": {"first": y.first_label, "last": y.last_label, "n_months": len(y)},
    }
    return ReportBundle(reports, dm, cons, proxies, shares, metadata)


def dm_decision(result: DmResult, level: float = 0.05) -> str:
    if result.degenerate and math.isinf(result.statistic):
        return "candidate better" if result.statistic > 0 else "benchmark better"
    if not result.significant(level):
        return "no significant difference"
    return "candidate better" if result.statistic > 0 else "benchmark better"
