"""How often AIC (and, for comparison, BIC) recovers p = 2 on AR(2) data."""
import argparse
import math
from collections import Counter

import numpy as np

from likert_consensus.forecast_lab import TimeSeries, select_and_fit
from likert_consensus.synthetic import ar_series


def bic_order(y, max_lag):
    fits = [select_and_fit(y, max_lag=max_lag, orders=[p]) for p in range(1, max_lag + 1)]
    scores = [f.n_obs * math.log(f.ssr / f.n_obs) + f.n_coefficients * math.log(f.n_obs) for f in fits]
    return fits[int(np.argmin(scores))].lag_order


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--max-lag", type=int, default=12)
    args = ap.parse_args()
    aic, bic = Counter(), Counter()
    for seed in range(args.runs):
        y = TimeSeries(0, ar_series([0.5, 0.3], args.n, np.random.default_rng(seed)))
        aic[select_and_fit(y, max_lag=args.max_lag).lag_order] += 1
        bic[bic_order(y, args.max_lag)] += 1
    print("AIC:", dict(sorted(aic.items())))
    print("BIC:", dict(sorted(bic.items())))


if __name__ == "__main__":
    main()
