"""Serialization of a :class:`ReportBundle`.

JSON carries the whole bundle and round-trips exactly (floats are written with
``repr`` precision; non-finite values as the strings ``"inf"``, ``"-inf"``,
``"nan"``). CSV is the accuracy summary: one row per model with MAPFE
and, for candidates, the DM statistic against the AR benchmark. CSV numbers
are rounded half-even to 8 significant digits at write time only.
"""
from __future__ import annotations

import csv
import json
import math
from decimal import ROUND_HALF_EVEN, Context, Decimal
from pathlib import Path

import numpy as np

from ..errors import IoError
from ..forecast_lab import BacktestReport, DmResult, ScaledProxySeries, TimeSeries
from ..forecast_lab.series import format_month, parse_month
from .pipeline import BENCHMARK, ReportBundle

CSV_COLUMNS = ("model", "mapfe", "dm_statistic", "dm_p_value", "dm_degenerate", "cell")
SIGNIFICANT_DIGITS = 8


def fmt(x: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Round half-even to ``digits`` significant digits; plain notation when reasonable."""
    if x is None:
        return ""
    if not math.isfinite(x):
        return "inf" if x > 0 else "-inf" if x < 0 else "nan"
    if x == 0:
        return "0"
    d = Context(prec=digits, rounding=ROUND_HALF_EVEN).plus(Decimal(repr(float(x))))
    out = format(d, "f") if -7 <= d.adjusted() < 16 else format(d, "E")
    if "." in out and "E" not in out:
        out = out.rstrip("0").rstrip(".")
    return out


# -- JSON --------------------------------------------------------------------

def _num(x: float):
    x = float(x)
    if math.isfinite(x):
        return x
    return "inf" if x > 0 else "-inf" if x < 0 else "nan"


def _unnum(x) -> float:
    return float(x)


def _series(ts: TimeSeries) -> dict:
    return {"start": format_month(ts.start), "values": [_num(v) for v in ts.values]}


def _unseries(d: dict) -> TimeSeries:
    return TimeSeries(parse_month(d["start"]), np.array([_unnum(v) for v in d["values"]], dtype=float))


def bundle_to_dict(bundle: ReportBundle) -> dict:
    return {
        "metadata": bundle.metadata,
        "models": {
            name: {
                "mapfe": _num(r.mapfe),
                "forecasts": _series(r.forecasts),
                "actuals": _series(r.actuals),
                "per_period_lag_orders": list(r.per_period_lag_orders),
            }
            for name, r in bundle.reports.items()
        },
        "dm": {
            name: {
                "benchmark": BENCHMARK,
                "statistic": _num(d.statistic),
                "p_value": _num(d.p_value),
                "loss_name": d.loss_name,
                "bandwidth": d.bandwidth,
                "degenerate": d.degenerate,
                "mean_differential": _num(d.mean_differential),
                "n": d.n,
                "harvey": d.harvey,
            }
            for name, d in bundle.dm.items()
        },
        "consensus": {k: _series(v) for k, v in bundle.consensus.items()},
        "proxies": {
            k: {
                "series": _series(p.series),
                "smoothing_window": p.smoothing_window,
                "scaling_window": p.scaling_window,
                "degenerate_windows": list(p.degenerate_windows),
            }
            for k, p in bundle.proxies.items()
        },
        "shares": {k: _series(v) for k, v in bundle.shares.items()},
    }


def bundle_from_dict(d: dict) -> ReportBundle:
    reports = {
        name: BacktestReport(name, _unseries(r["forecasts"]), _unseries(r["actuals"]),
                             _unnum(r["mapfe"]), tuple(r["per_period_lag_orders"]))
        for name, r in d["models"].items()
    }
    dm = {
        name: DmResult(_unnum(r["statistic"]), _unnum(r["p_value"]), r["loss_name"], r["bandwidth"],
                       r["degenerate"], _unnum(r["mean_differential"]), r["n"], r["harvey"])
        for name, r in d["dm"].items()
    }
    proxies = {
        k: ScaledProxySeries(_unseries(p["series"]), p["smoothing_window"], p["scaling_window"],
                             tuple(p["degenerate_windows"]))
        for k, p in d["proxies"].items()
    }
    return ReportBundle(reports, dm, {k: _unseries(v) for k, v in d["consensus"].items()}, proxies,
                        {k: _unseries(v) for k, v in d["shares"].items()}, d["metadata"])


def dumps(bundle: ReportBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=2, sort_keys=True, allow_nan=False) + "\n"


def loads(text: str) -> ReportBundle:
    return bundle_from_dict(json.loads(text))


# -- CSV ---------------------------------------------------------------------

def table_rows(bundle: ReportBundle, level: float = 0.05) -> list[dict]:
    """One summary row per model; the ``cell`` column reads ``MAPFE (DM*)``."""
    rows = []
    for name, rep in bundle.reports.items():
        row = {"model": name, "mapfe": fmt(rep.mapfe), "dm_statistic": "", "dm_p_value": "",
               "dm_degenerate": "", "cell": f"{rep.mapfe:.3f}"}
        dm = bundle.dm.get(name)
        if dm is not None:
            star = "*" if dm.p_value < level else ""
            row.update(dm_statistic=fmt(dm.statistic), dm_p_value=fmt(dm.p_value),
                       dm_degenerate=str(dm.degenerate).lower(),
                       cell=f"{rep.mapfe:.3f} ({dm.statistic:.3f}{star})")
        rows.append(row)
    return rows


def _target(out_path, filename: str, force_dir: bool = False) -> Path:
    out = Path(out_path)
    if out.suffix and not out.is_dir() and not force_dir:
        out.parent.mkdir(parents=True, exist_ok=True)
        return out
    out.mkdir(parents=True, exist_ok=True)
    return out / filename


def emit_report(bundle: ReportBundle, format: str, out_path) -> list[Path]:
    """Write ``report.json`` / ``report.csv`` (or both) into ``out_path``.

    ``out_path`` is a directory, created if missing, unless it has a file
    suffix and a single format is requested.
    """
    formats = ("json", "csv") if format == "both" else (format,)
    written = []
    try:
        for f in formats:
            if f == "json":
                path = _target(out_path, "report.json", len(formats) > 1)
                path.write_text(dumps(bundle), encoding="utf-8")
            elif f == "csv":
                path = _target(out_path, "report.csv", len(formats) > 1)
                with open(path, "w", newline="", encoding="utf-8") as fh:
                    w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
                    w.writeheader()
                    w.writerows(table_rows(bundle))
            else:
                raise ValueError(f"unknown format {f!r}")
            written.append(path)
    except OSError as exc:
        raise IoError(f"cannot write report: {exc}") from exc
    return written
