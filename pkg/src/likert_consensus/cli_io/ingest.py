"""CSV ingestion.

Survey file: ``date,pp,p,e,m,mm[,dk]``; rates file: ``date,rate``. Comma
separated, UTF-8, header required, dates ``YYYY-MM``. Extra columns are
ignored. Data rows are numbered from 1 in error messages.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..consensus_core import DEFAULT_SUM_TOLERANCE, FiveCategoryShares, make_five
from ..errors import BadDate, ConsensusLabError, MissingColumn, NonPositiveRate, ValidationError
from ..forecast_lab.series import TimeSeries, check_monthly, format_month, parse_month

SURVEY_COLUMNS = ("date", "pp", "p", "e", "m", "mm")
RATE_COLUMNS = ("date", "rate")


@dataclass(frozen=True)
class SurveyPanel:
    """Monthly five-option shares starting at month ordinal ``start``."""

    start: int
    rows: tuple[FiveCategoryShares, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def end(self) -> int:
        return self.start + len(self.rows)

    @property
    def dates(self) -> list[str]:
        return [format_month(o) for o in range(self.start, self.end)]


def _read(path, required: tuple[str, ...]) -> list[dict]:
    with open(Path(path), newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValidationError(f"{path}: empty file, header row required")
        header = [h.strip() for h in reader.fieldnames]
        reader.fieldnames = header
        for col in required:
            if col not in header:
                raise MissingColumn(col)
        return list(reader)


def _number(raw: str | None, column: str, row: int) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ValidationError(f"column {column!r}: {raw!r} is not a number", row=row) from None
    if not math.isfinite(value):
        raise ValidationError(f"column {column!r}: {raw!r} is not finite", row=row)
    return value


def _dates(records: list[dict]) -> list[int]:
    ordinals = []
    for i, rec in enumerate(records, start=1):
        try:
            ordinals.append(parse_month(rec["date"] or ""))
        except BadDate as exc:
            exc.row = i
            raise
    check_monthly(ordinals)
    return ordinals


def parse_survey_csv(path, sum_tolerance: float = DEFAULT_SUM_TOLERANCE) -> SurveyPanel:
    records = _read(path, SURVEY_COLUMNS)
    if not records:
        raise ValidationError(f"{path}: no data rows")
    ordinals = _dates(records)
    rows = []
    for i, rec in enumerate(records, start=1):
        values = [_number(rec[c], c, i) for c in SURVEY_COLUMNS[1:]]
        dk_raw = rec.get("dk")
        dk = 0.0 if dk_raw is None or dk_raw.strip() == "" else _number(dk_raw, "dk", i)
        try:
            rows.append(make_five(*values, dk=dk, sum_tolerance=sum_tolerance))
        except ConsensusLabError as exc:
            exc.row = i
            raise
    return SurveyPanel(ordinals[0], tuple(rows))


def parse_rates_csv(path) -> TimeSeries:
    records = _read(path, RATE_COLUMNS)
    if not records:
        raise ValidationError(f"{path}: no data rows")
    ordinals = _dates(records)
    values = []
    for i, rec in enumerate(records, start=1):
        v = _number(rec["rate"], "rate", i)
        if v <= 0:
            raise NonPositiveRate(f"rate {v} is not strictly positive", row=i)
        values.append(v)
    return TimeSeries(ordinals[0], np.array(values))


def parse_forecast_csv(path) -> tuple[TimeSeries, TimeSeries]:
    """``date,actual,forecast`` file -> (actuals, errors = actual - forecast)."""
    records = _read(path, ("date", "actual", "forecast"))
    if not records:
        raise ValidationError(f"{path}: no data rows")
    ordinals = _dates(records)
    a = np.array([_number(r["actual"], "actual", i) for i, r in enumerate(records, 1)])
    f = np.array([_number(r["forecast"], "forecast", i) for i, r in enumerate(records, 1)])
    return TimeSeries(ordinals[0], a), TimeSeries(ordinals[0], a - f)


def write_survey_csv(panel: SurveyPanel, path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(SURVEY_COLUMNS + ("dk",))
        for date, row in zip(panel.dates, panel.rows):
            w.writerow([date] + [repr(v) for v in (row.pp, row.p, row.e, row.m, row.mm, row.dk)])
    return path


def write_rates_csv(series: TimeSeries, path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(RATE_COLUMNS)
        for date, v in zip(series.dates, series.values):
            w.writerow([date, repr(float(v))])
    return path
