"""Synthetic survey panels and rate series with a known data-generating process.

The survey is driven by a persistent latent signal ``lam_t`` in (0, 1): each
month's five-option shares are a mixture ``lam_t * vertex + (1 - lam_t) *
uniform``, perturbed by Dirichlet sampling noise, so C5 tracks ``100 *
lam_t``. With ``dependence=True`` the rate loads on the previous month's
latent signal; with ``dependence=False`` it loads on an independent
copy of that signal instead (a placebo with identical rate dynamics).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cli_io.ingest import SurveyPanel
from .consensus_core import FiveCategoryShares
from .forecast_lab.series import TimeSeries, parse_month
from .simplex_mc import make_rng

# mixture target: "slightly increase" unemployment
VERTEX = np.array([0.0, 1.0, 0.0, 0.0, 0.0])


@dataclass(frozen=True)
class SyntheticDataset:
    survey: SurveyPanel
    rates: TimeSeries
    latent: TimeSeries


def latent_signal(n: int, rng: np.random.Generator, rho: float = 0.95, sd: float = 0.35) -> np.ndarray:
    """Logistic transform of a stationary Gaussian AR(1), squeezed into [0.1, 0.9]."""
    z = np.empty(n)
    z[0] = rng.normal(0.0, sd / np.sqrt(1 - rho ** 2))
    for t in range(1, n):
        z[t] = rho * z[t - 1] + rng.normal(0.0, sd)
    return 0.1 + 0.8 / (1.0 + np.exp(-z))


def shares_from_signal(lam: np.ndarray, rng: np.random.Generator, concentration: float = 3000.0,
                       dk: float = 2.0) -> list[FiveCategoryShares]:
    rows = []
    for value in lam:
        mean = value * VERTEX + (1.0 - value) * np.full(5, 0.2)
        draw = rng.dirichlet(concentration * np.maximum(mean, 1e-3))
        five = draw * (100.0 - dk)
        rows.append(FiveCategoryShares(*(float(v) for v in five), dk=float(dk)))
    return rows


def make_dataset(n_months: int = 132, seed: int = 0, *, dependence: bool = True,
                 start: str = "2007-01", level: float = 8.0, loading: float = 6.0,
                 rate_noise: float = 0.05, signal_window: int = 1,
                 concentration: float = 3000.0, signal_rho: float = 0.9,
                 signal_sd: float = 0.5) -> SyntheticDataset:
    """Survey panel plus a strictly positive rate series of ``n_months`` months.

    ``rate_t = level + loading * (mean(s_{t-signal_window..t-1}) - 0.5) + noise`` where
    ``s`` is the survey's latent signal (dependent case) or an independent
    draw of the same process (placebo).
    """
    rng = make_rng(seed)
    burn = signal_window + 1
    lam = latent_signal(n_months + burn, rng, signal_rho, signal_sd)
    rows = shares_from_signal(lam[burn:], rng, concentration)
    noise = rng.normal(0.0, rate_noise, n_months + burn)
    # placebo: same rate dynamics, driven by an independent copy of the signal
    driver = lam if dependence else latent_signal(n_months + burn, rng, signal_rho, signal_sd)
    rate = np.array([level + loading * (driver[t - signal_window:t].mean() - 0.5) + noise[t]
                     for t in range(burn, n_months + burn)])
    first = parse_month(start)
    return SyntheticDataset(SurveyPanel(first, tuple(rows)), TimeSeries(first, rate),
                            TimeSeries(first, lam[burn:]))


def ar_series(phi, n: int, rng: np.random.Generator, noise_sd: float = 1.0, burn: int = 200,
              intercept: float = 0.0) -> np.ndarray:
    """Gaussian AR(p) sample path after a burn-in."""
    phi = np.asarray(phi, dtype=float)
    p = phi.size
    total = n + burn
    y = np.zeros(total)
    e = rng.normal(0.0, noise_sd, total)
    for t in range(total):
        acc = intercept + e[t]
        for j in range(1, p + 1):
            if t - j >= 0:
                acc += phi[j - 1] * y[t - j]
        y[t] = acc
    return y[burn:]
