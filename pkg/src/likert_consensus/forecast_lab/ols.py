"""Least squares and the information criterion used for lag selection."""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ..errors import NonPositiveSSR, RankDeficient, TooFewObservations


class OlsResult(NamedTuple):
    coefficients: np.ndarray
    residuals: np.ndarray
    ssr: float


def ols_fit(y, regressors, *, allow_rank_deficient: bool = False) -> OlsResult:
    """Ordinary least squares of ``y`` on the columns of ``regressors``.

    With ``allow_rank_deficient`` the minimum-norm solution is returned
    instead of raising :class:`RankDeficient`.
    """
    y = np.asarray(y, dtype=float)
    X = np.asarray(regressors, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    n, k = X.shape
    if y.shape != (n,):
        raise ValueError(f"y has shape {y.shape}, regressors have {n} rows")
    if n <= k:
        raise TooFewObservations(f"{n} observations for {k} coefficients")
    coef, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    if rank < k and not allow_rank_deficient:
        raise RankDeficient(f"regressor matrix has rank {rank} < {k}")
    resid = y - X @ coef
    return OlsResult(coef, resid, float(resid @ resid))


def aic(ssr: float, n_obs: int, n_params: int) -> float:
    """``n_obs * ln(ssr / n_obs) + 2 * n_params``."""
    if not n_obs > n_params >= 1:
        raise ValueError(f"need n_obs > n_params >= 1, got {n_obs}, {n_params}")
    if not ssr > 0:
        raise NonPositiveSSR(f"ssr = {ssr}: exact fit")
    return n_obs * math.log(ssr / n_obs) + 2 * n_params
