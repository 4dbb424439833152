"""Command line interface.

Exit codes: 0 success, 1 validation error (bad input, configuration or
output path), 2 computation error (numerical failure on valid input).
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .cli_io.ingest import parse_forecast_csv, parse_survey_csv
from .cli_io.pipeline import RunConfig, consensus_series, dm_decision, run_pipeline
from .cli_io.plots import emit_plot_data
from .cli_io.report import emit_report, fmt
from .consensus_core import DEFAULT_SUM_TOLERANCE
from .errors import ComputationError, ValidationError
from .forecast_lab import EXOG_TIMINGS, dm_test
from .forecast_lab.accuracy import LOSSES
from .simplex_mc import RNG_ALGORITHM, SAMPLERS, SimulationConfig, simulate_consensus, summary_stats

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def _write_json(obj, out: str | None, filename: str) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if not path.suffix:
        path.mkdir(parents=True, exist_ok=True)
        path = path / filename
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}", file=sys.stderr)


def cmd_consensus(args) -> int:
    panel = parse_survey_csv(args.survey, args.sum_tolerance)
    cons, shares = consensus_series(panel)
    if args.format == "json":
        _write_json({"dates": panel.dates,
                     **{k: [float(v) for v in s.values] for k, s in cons.items()},
                     **{k: [float(v) for v in s.values] for k, s in shares.items()}},
                    args.out, "consensus.json")
    else:
        header = ["date", "c3", "c5", "increase", "no_change", "fall"]
        cols = [cons["C3"], cons["C5"], shares["increase"], shares["no_change"], shares["fall"]]
        rows = [[d] + [fmt(c.values[i]) for c in cols] for i, d in enumerate(panel.dates)]
        if args.out is None:
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        else:
            path = Path(args.out)
            if not path.suffix:
                path.mkdir(parents=True, exist_ok=True)
                path = path / "consensus.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(header)
                w.writerows(rows)
            print(f"wrote {path}", file=sys.stderr)
    if args.plots:
        from .cli_io.pipeline import ReportBundle
        emit_plot_data(ReportBundle({}, {}, cons, {}, shares), args.plots)
    return EXIT_OK


def cmd_simulate(args) -> int:
    results = {}
    for k in args.categories:
        cfg = SimulationConfig(k, args.n, args.seed, args.sampler, args.shards)
        results[f"C{k}"] = summary_stats(simulate_consensus(cfg)).as_dict()
    print(f"{'':6}{'Mean':>10}{'Std.Dev.':>10}{'Min.':>10}{'Max.':>10}{'Range':>10}{'IQR':>10}")
    for name, s in results.items():
        print(f"{name:6}" + "".join(f"{s[c]:10.3f}" for c in ("mean", "std_dev", "min", "max", "range", "iqr")))
    if args.out is not None:
        _write_json({"metadata": {"version": __version__, "rng_algorithm": RNG_ALGORITHM,
                                  "seed": args.seed, "n_points": args.n, "sampler": args.sampler,
                                  "shards": args.shards},
                     "summary": results}, args.out, "simulation.json")
    return EXIT_OK


def cmd_backtest(args) -> int:
    config = RunConfig(
        smoothing_window=args.smoothing_window, scaling_window=args.scaling_window,
        max_lag=args.max_lag, horizon=args.horizon, dm_bandwidth=args.dm_bandwidth,
        exog_timing=args.exog_timing, seed=args.seed, sum_tolerance=args.sum_tolerance,
        loss=args.loss, reselect_each_origin=not args.fixed_order, harvey=args.harvey)
    bundle = run_pipeline(args.survey, args.rates, config)
    for path in emit_report(bundle, args.format, args.out):
        print(f"wrote {path}", file=sys.stderr)
    if args.plots:
        for path in emit_plot_data(bundle, args.plots):
            print(f"wrote {path}", file=sys.stderr)
    bench = bundle.reports["AR"]
    print(f"AR        MAPFE {bench.mapfe:.3f}")
    for name, dm in bundle.dm.items():
        print(f"{name:9} MAPFE {bundle.reports[name].mapfe:.3f}  DM {dm.statistic:.3f} "
              f"(p={dm.p_value:.3f}{', degenerate' if dm.degenerate else ''}): {dm_decision(dm)}")
    return EXIT_OK


def cmd_dm(args) -> int:
    actual_b, err_b = parse_forecast_csv(args.benchmark)
    actual_c, err_c = parse_forecast_csv(args.candidate)
    if actual_b != actual_c:
        raise ValidationError("benchmark and candidate files disagree on dates or actuals")
    res = dm_test(err_b, err_c, actual_b, args.bandwidth, args.loss, args.harvey)
    out = {"statistic": fmt(res.statistic), "p_value": fmt(res.p_value), "loss": res.loss_name,
           "bandwidth": res.bandwidth, "degenerate": res.degenerate, "n": res.n,
           "harvey": res.harvey, "decision": dm_decision(res)}
    _write_json(out, args.out, "dm.json")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="likert-consensus", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("consensus", help="C3/C5 series from a survey CSV")
    c.add_argument("--survey", required=True)
    c.add_argument("--sum-tolerance", type=float, default=DEFAULT_SUM_TOLERANCE)
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--out", help="output file or directory (default: stdout)")
    c.add_argument("--plots", help="directory for plot_data.csv and consensus.svg")
    c.set_defaults(func=cmd_consensus)

    s = sub.add_parser("simulate", help="sampling distribution of consensus on the simplex")
    s.add_argument("--n", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--categories", type=int, nargs="+", default=[3, 5])
    s.add_argument("--sampler", choices=SAMPLERS, default="dirichlet")
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--format", choices=("json",), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_simulate)

    b = sub.add_parser("backtest", help="AR vs ARX-with-proxy backtest and DM tests")
    b.add_argument("--survey", required=True)
    b.add_argument("--rates", required=True)
    b.add_argument("--smoothing-window", type=int, default=3)
    b.add_argument("--scaling-window", type=int, default=24)
    b.add_argument("--max-lag", type=int, default=12)
    b.add_argument("--horizon", type=int, default=12)
    b.add_argument("--dm-bandwidth", type=int, default=None,
                   help="Newey-West bandwidth (default floor(horizon^(1/3)))")
    b.add_argument("--exog-timing", choices=sorted(EXOG_TIMINGS), default="lagged")
    b.add_argument("--seed", type=int, default=42)
    b.add_argument("--sum-tolerance", type=float, default=DEFAULT_SUM_TOLERANCE)
    b.add_argument("--loss", choices=LOSSES, default="ape")
    b.add_argument("--fixed-order", action="store_true",
                   help="select the lag order once at the first origin")
    b.add_argument("--harvey", action="store_true", help="small-sample DM correction")
    b.add_argument("--format", choices=("json", "csv", "both"), default="json")
    b.add_argument("--out", default="report")
    b.add_argument("--plots", help="directory for plot_data.csv and consensus.svg")
    b.set_defaults(func=cmd_backtest)

    d = sub.add_parser("dm", help="Diebold-Mariano test on two date,actual,forecast files")
    d.add_argument("--benchmark", required=True)
    d.add_argument("--candidate", required=True)
    d.add_argument("--bandwidth", type=int, default=None)
    d.add_argument("--loss", choices=LOSSES, default="ape")
    d.add_argument("--harvey", action="store_true")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dm)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ComputationError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except (ValueError, OSError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
