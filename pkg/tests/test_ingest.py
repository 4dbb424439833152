import pytest

from likert_consensus.cli_io.ingest import parse_forecast_csv, parse_rates_csv, parse_survey_csv
from likert_consensus.errors import (BadDate, GapInDates, MissingColumn, NegativeShare,
                                     NonPositiveRate, SumOutOfTolerance, ValidationError)


def write(tmp_path, text, name="f.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


class TestSurvey:
    def test_schema_example(self, tmp_path):
        panel = parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm,dk\n2007-01,10,30,25,20,10,5\n"))
        assert len(panel) == 1 and panel.dates == ["2007-01"]
        row = panel.rows[0]
        assert (row.pp, row.p, row.e, row.m, row.mm, row.dk) == (10, 30, 25, 20, 10, 5)

    def test_dk_optional(self, tmp_path):
        panel = parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007-01,10,30,30,20,10\n"))
        assert panel.rows[0].dk == 0

    def test_extra_columns_ignored(self, tmp_path):
        panel = parse_survey_csv(write(tmp_path, "date,balance,pp,p,e,m,mm\n2007-01,3.2,10,30,30,20,10\n"))
        assert panel.rows[0].e == 30

    def test_missing_column(self, tmp_path):
        with pytest.raises(MissingColumn) as exc:
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m\n2007-01,10,30,30,30\n"))
        assert exc.value.column == "mm"

    def test_gap(self, tmp_path):
        with pytest.raises(GapInDates) as exc:
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007-01,10,30,30,20,10\n"
                                             "2007-03,10,30,30,20,10\n"))
        assert exc.value.row == 2

    def test_bad_date(self, tmp_path):
        with pytest.raises(BadDate) as exc:
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007/01,10,30,30,20,10\n"))
        assert exc.value.row == 1

    def test_sum_and_row_number(self, tmp_path):
        with pytest.raises(SumOutOfTolerance) as exc:
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007-01,10,30,30,20,10\n"
                                             "2007-02,10,30,30,20,5\n"))
        assert exc.value.row == 2 and "row 2" in str(exc.value)

    def test_rounding_renormalized(self, tmp_path):
        panel = parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm,dk\n2007-01,10.1,30,25,20,10,5.1\n"))
        r = panel.rows[0]
        assert r.pp + r.p + r.e + r.m + r.mm + r.dk == pytest.approx(100, abs=1e-9)

    def test_negative(self, tmp_path):
        with pytest.raises(NegativeShare):
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007-01,-1,31,30,20,20\n"))

    def test_not_a_number(self, tmp_path):
        with pytest.raises(ValidationError):
            parse_survey_csv(write(tmp_path, "date,pp,p,e,m,mm\n2007-01,x,31,30,20,20\n"))


class TestRates:
    def test_one_point(self, tmp_path):
        s = parse_rates_csv(write(tmp_path, "date,rate\n2007-01,8.3\n"))
        assert s.dates == ["2007-01"] and list(s.values) == [8.3]

    def test_zero_rate(self, tmp_path):
        with pytest.raises(NonPositiveRate):
            parse_rates_csv(write(tmp_path, "date,rate\n2007-01,0\n"))

    def test_unsorted(self, tmp_path):
        with pytest.raises(BadDate):
            parse_rates_csv(write(tmp_path, "date,rate\n2007-02,8.3\n2007-01,8.2\n"))


def test_forecast_file(tmp_path):
    actual, err = parse_forecast_csv(write(tmp_path, "date,actual,forecast\n2017-01,8,7.5\n2017-02,9,9.5\n"))
    assert list(err.values) == [0.5, -0.5] and list(actual.values) == [8, 9]
