import sys
from datetime import timedelta

import pytest
from hypothesis import settings

from likert_consensus.cli_io.ingest import write_rates_csv, write_survey_csv
from likert_consensus.synthetic import make_dataset

settings.register_profile("default", max_examples=200, deadline=timedelta(seconds=5))
settings.load_profile("default")


@pytest.fixture(scope="session")
def synthetic():
    return make_dataset(n_months=132, seed=7)


@pytest.fixture
def csv_inputs(tmp_path, synthetic):
    survey = write_survey_csv(synthetic.survey, tmp_path / "survey.csv")
    rates = write_rates_csv(synthetic.rates, tmp_path / "rates.csv")
    return survey, rates


def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(module, "VERDICTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
