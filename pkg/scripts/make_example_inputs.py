"""Write a synthetic survey/rates CSV pair for trying the CLI.

    python3 scripts/make_example_inputs.py --out data/
    likert-consensus backtest --survey data/survey.csv --rates data/rates.csv --out report
"""
import argparse
from pathlib import Path

from likert_consensus.cli_io.ingest import write_rates_csv, write_survey_csv
from likert_consensus.synthetic import make_dataset


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data")
    ap.add_argument("--months", type=int, default=132)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--placebo", action="store_true", help="rate independent of the survey")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    d = make_dataset(args.months, args.seed, dependence=not args.placebo)
    print(write_survey_csv(d.survey, out / "survey.csv"))
    print(write_rates_csv(d.rates, out / "rates.csv"))


if __name__ == "__main__":
    main()
