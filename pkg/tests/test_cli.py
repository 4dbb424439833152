import csv
import json

import pytest

from likert_consensus import cli
from likert_consensus.errors import NonPositiveSSR


def test_simulate_stdout(capsys):
    assert cli.main(["simulate", "--n", "2000", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("C3") and "IQR" in out


def test_simulate_json_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert cli.main(["simulate", "--n", "500", "--shards", "3", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert set(doc["summary"]) == {"C3", "C5"} and "PCG64" in doc["metadata"]["rng_algorithm"]


def test_consensus_csv(csv_inputs, tmp_path):
    survey, _ = csv_inputs
    out = tmp_path / "cons.csv"
    assert cli.main(["consensus", "--survey", str(survey), "--out", str(out),
                     "--plots", str(tmp_path / "plots")]) == 0
    rows = list(csv.DictReader(open(out, newline="")))
    assert len(rows) == 132 and 0 <= float(rows[0]["c3"]) <= 100
    assert (tmp_path / "plots" / "consensus.svg").exists()


def test_backtest_and_dm(csv_inputs, tmp_path, capsys):
    survey, rates = csv_inputs
    out = tmp_path / "rep"
    code = cli.main(["backtest", "--survey", str(survey), "--rates", str(rates),
                     "--format", "both", "--out", str(out)])
    assert code == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["metadata"]["config"]["dm_bandwidth"] is None
    assert doc["metadata"]["dm_bandwidth_used"] == 2

    def forecast_file(name):
        m = doc["models"][name]
        path = tmp_path / f"{name}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["date", "actual", "forecast"])
            ord0 = m["actuals"]["start"]
            y, mo = map(int, ord0.split("-"))
            for i, (a, f) in enumerate(zip(m["actuals"]["values"], m["forecasts"]["values"])):
                yy, mm = divmod(y * 12 + mo - 1 + i, 12)
                w.writerow([f"{yy:04d}-{mm + 1:02d}", repr(a), repr(f)])
        return path

    dm_out = tmp_path / "dm.json"
    assert cli.main(["dm", "--benchmark", str(forecast_file("AR")),
                     "--candidate", str(forecast_file("ARX-SC3")), "--out", str(dm_out)]) == 0
    res = json.loads(dm_out.read_text())
    assert float(res["statistic"]) == pytest.approx(doc["dm"]["ARX-SC3"]["statistic"], rel=1e-7)


def test_validation_exit_codes(tmp_path, csv_inputs):
    survey, rates = csv_inputs
    bad = tmp_path / "bad.csv"
    bad.write_text("date,pp,p,e,m\n2007-01,10,30,30,30\n")
    assert cli.main(["consensus", "--survey", str(bad)]) == 1
    assert cli.main(["consensus", "--survey", str(tmp_path / "missing.csv")]) == 1
    assert cli.main(["simulate", "--categories", "1"]) == 1
    assert cli.main(["backtest", "--survey", str(survey), "--rates", str(rates),
                     "--exog-timing", "sideways"]) == 1
    assert cli.main(["no-such-command"]) == 1
    assert cli.main(["backtest", "--survey", str(survey), "--rates", str(rates),
                     "--horizon", "500", "--out", str(tmp_path / "r")]) == 1


def test_computation_exit_code(csv_inputs, tmp_path, monkeypatch, capsys):
    def boom(*a, **k):
        raise NonPositiveSSR("ssr = 0", stage="fit")
    monkeypatch.setattr(cli, "run_pipeline", boom)
    survey, rates = csv_inputs
    assert cli.main(["backtest", "--survey", str(survey), "--rates", str(rates),
                     "--out", str(tmp_path / "r")]) == 2
    assert "stage fit" in capsys.readouterr().err
