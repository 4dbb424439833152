import csv
import json
import re

import numpy as np
import pytest

from likert_consensus.cli_io.pipeline import ReportBundle, RunConfig, run_pipeline
from likert_consensus.cli_io.plots import SVG_HEIGHT, emit_plot_data, y_pixel, MARGIN
from likert_consensus.cli_io.report import dumps, emit_report, fmt, loads, table_rows
from likert_consensus.consensus_core import FiveCategoryShares, consensus, group_five_to_three
from likert_consensus.errors import TooShort, ValidationError
from likert_consensus.forecast_lab import BacktestReport, DmResult, TimeSeries, moving_average
from likert_consensus.cli_io.ingest import SurveyPanel
from likert_consensus.synthetic import make_dataset, shares_from_signal


@pytest.fixture(scope="module")
def bundle():
    d = make_dataset(n_months=120, seed=3)
    return run_pipeline(d.survey, d.rates)


def test_bundle_contents(bundle):
    assert set(bundle.reports) == {"AR", "ARX-SC3", "ARX-SC5"}
    assert set(bundle.dm) == {"ARX-SC3", "ARX-SC5"}
    assert set(bundle.proxies) == {"SC3", "SC5"}
    for rep in bundle.reports.values():
        assert len(rep.forecasts) == 12
    assert bundle.metadata["dm_bandwidth_used"] == 2
    assert "PCG64" in bundle.metadata["rng_algorithm"]


def test_deterministic(csv_inputs):
    survey, rates = csv_inputs
    assert dumps(run_pipeline(survey, rates)) == dumps(run_pipeline(survey, rates))


def test_near_sufficient_proxy_beats_ar():
    """Rate = 2 * last month's smoothed C3 + 5 + tiny noise."""
    rng = np.random.default_rng(0)
    lam = 0.1 + 0.8 / (1 + np.exp(-np.cumsum(rng.normal(0, 0.3, 120)) / 3))
    panel = SurveyPanel(24084, tuple(shares_from_signal(lam, rng)))
    c3 = TimeSeries(panel.start, np.array([consensus(group_five_to_three(r)) for r in panel.rows]))
    sm = moving_average(c3, 3)
    rate = np.empty(120)
    rate[:3] = 2 * sm.values[0] + 5
    rate[3:] = 2 * sm.values[:-1] + 5 + rng.normal(0, 1e-3, 117)
    b = run_pipeline(panel, TimeSeries(panel.start, rate))
    assert b.reports["ARX-SC3"].mapfe < b.reports["AR"].mapfe


def test_too_short_is_stage_tagged():
    d = make_dataset(n_months=40, seed=1)
    with pytest.raises(TooShort) as exc:
        run_pipeline(d.survey, d.rates)
    assert exc.value.stage == "align"
    assert "stage align" in str(exc.value)


def test_config_validation():
    with pytest.raises(ValidationError):
        RunConfig(exog_timing="sideways")
    with pytest.raises(ValidationError):
        RunConfig(horizon=0)


def test_json_round_trip(bundle):
    text = dumps(bundle)
    again = loads(text)
    assert dumps(again) == text
    assert again.reports["AR"].forecasts == bundle.reports["AR"].forecasts
    assert again.dm == bundle.dm


def test_json_non_finite_round_trip(bundle):
    b = ReportBundle(bundle.reports, {"ARX-SC3": DmResult(float("inf"), 0.0, "ape", 2, True, 1.0, 12)},
                     bundle.consensus, bundle.proxies, bundle.shares, bundle.metadata)
    text = dumps(b)
    json.loads(text)  # strict JSON, no bare Infinity tokens
    assert "Infinity" not in text
    assert loads(text).dm["ARX-SC3"].statistic == float("inf")


def test_emit_files(bundle, tmp_path):
    out = tmp_path / "fresh" / "dir"
    paths = emit_report(bundle, "both", out)
    assert sorted(p.name for p in paths) == ["report.csv", "report.json"]
    with open(out / "report.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert [r["model"] for r in rows] == ["AR", "ARX-SC3", "ARX-SC5"]
    assert rows[0]["dm_statistic"] == ""


def test_summary_row_layout():
    dates = TimeSeries(24204, np.ones(12))
    rep = lambda name, m: BacktestReport(name, dates, dates, m, (1,) * 12)
    b = ReportBundle({"AR": rep("AR", 1.579), "ARX-SC5": rep("ARX-SC5", 0.754)},
                     {"ARX-SC5": DmResult(4.224, 2.4e-5, "ape", 2, False)}, {}, {}, {})
    rows = table_rows(b)
    assert rows[0]["cell"] == "1.579"
    assert rows[1]["cell"] == "0.754 (4.224*)"
    assert rows[1]["mapfe"] == "0.754" and rows[1]["dm_statistic"] == "4.224"


@pytest.mark.parametrize("x, out", [(1.579, "1.579"), (0.125, "0.125"), (2 / 3, "0.66666667"),
                                    (123456789.5, "123456790"), (0.0, "0"), (-4.5, "-4.5"),
                                    (1e-9, "1E-9")])
def test_fmt(x, out):
    assert fmt(x) == out


def test_fmt_half_even():
    assert fmt(0.125, digits=2) == "0.12"
    assert fmt(0.375, digits=2) == "0.38"


def test_plot_data(bundle, tmp_path):
    csv_path, svg_path = emit_plot_data(bundle, tmp_path / "plots")
    with open(csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == len(bundle.consensus["C3"])
    for r in rows:
        total = float(r["fall_share"]) + float(r["no_change_share"]) + float(r["increase_share"])
        assert total == pytest.approx(100, abs=1e-3)
    svg = svg_path.read_text()
    pts = re.search(r'id="C5"[^>]*points="([^"]+)"', svg).group(1).split()
    ys = [float(p.split(",")[1]) for p in pts]
    assert ys == pytest.approx([y_pixel(v) for v in bundle.consensus["C5"].values], abs=0.01)


def test_svg_mapping_is_linear():
    assert y_pixel(100) == MARGIN
    assert y_pixel(0) == SVG_HEIGHT - MARGIN
    assert y_pixel(50) == pytest.approx((y_pixel(0) + y_pixel(100)) / 2)


def test_vertex_month_in_plot_csv(tmp_path):
    rows = [FiveCategoryShares(50, 50, 0, 0, 0)] + [FiveCategoryShares(10, 20, 40, 20, 10)] * 2
    panel = SurveyPanel(24084, tuple(rows))
    from likert_consensus.cli_io.pipeline import consensus_series
    cons, shares = consensus_series(panel)
    csv_path, _ = emit_plot_data(ReportBundle({}, {}, cons, {}, shares), tmp_path)
    first = next(csv.DictReader(open(csv_path, newline="")))
    assert float(first["c3"]) == pytest.approx(100) and float(first["increase_share"]) == 100
    # five-option view: 50/50 across two categories, not a vertex
    assert float(first["c5"]) < 100
