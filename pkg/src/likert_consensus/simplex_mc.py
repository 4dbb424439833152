"""Monte Carlo sampling distribution of the consensus metric.

Points are drawn uniformly on the simplex (flat Dirichlet) by normalizing
independent unit exponentials, ``E_i = -log(1 - U_i)``. Random numbers come
from numpy's PCG64 bit generator seeded through ``SeedSequence``; sharded
runs use ``SeedSequence.spawn`` and concatenate shards in order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .consensus_core import SurveyDistribution
from .errors import EmptySample

RNG_ALGORITHM = f"numpy.random.PCG64/SeedSequence (numpy {np.__version__})"

SAMPLERS = ("dirichlet", "normalized_uniform")


@dataclass(frozen=True)
class SimulationConfig:
    n_categories: int
    n_points: int = 10_000
    seed: int = 42
    sampler: str = "dirichlet"
    n_shards: int = 1

    def __post_init__(self):
        if self.n_categories < 2:
            raise ValueError("n_categories must be >= 2")
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be an unsigned integer")
        if self.sampler not in SAMPLERS:
            raise ValueError(f"sampler must be one of {SAMPLERS}")
        if self.n_shards < 1:
            raise ValueError("n_shards must be >= 1")


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    std_dev: float
    min: float
    max: float
    range: float
    iqr: float

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("mean", "std_dev", "min", "max", "range", "iqr")}


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def shares_from_uniforms(u: np.ndarray, sampler: str = "dirichlet") -> np.ndarray:
    """Map uniforms in [0, 1) to shares summing to 100 along the last axis.

    ``"dirichlet"`` is the uniform distribution on the simplex. The
    ``"normalized_uniform"`` variant (divide raw uniforms by their sum) is
    NOT uniform on the simplex; it is kept only for comparison runs.
    """
    u = np.asarray(u, dtype=float)
    if sampler == "dirichlet":
        w = -np.log1p(-u)
    elif sampler == "normalized_uniform":
        w = u
    else:
        raise ValueError(f"unknown sampler {sampler!r}")
    total = w.sum(axis=-1, keepdims=True)
    # all-zero rows (every U_i == 0) map to the barycentre, the limit of equal draws
    w = np.where(total > 0, w, 1.0)
    return 100.0 * w / np.where(total > 0, total, w.shape[-1])


def sample_uniform_simplex(n_categories: int, rng: np.random.Generator) -> SurveyDistribution:
    if n_categories < 2:
        raise ValueError("n_categories must be >= 2")
    shares = shares_from_uniforms(rng.random(n_categories))
    return SurveyDistribution(tuple(float(v) for v in shares))


def consensus_rows(shares: np.ndarray) -> np.ndarray:
    """Row-wise consensus for an (m, N) array of shares; same formula as ``consensus``."""
    n = shares.shape[-1]
    dev = shares - 100.0 / n
    c = np.sqrt(np.einsum("ij,ij->i", dev, dev)) / math.sqrt((n - 1) / n)
    return np.clip(c, 0.0, 100.0)


def simulate_consensus(config: SimulationConfig) -> np.ndarray:
    """Consensus values of ``n_points`` independent draws; identical config gives identical output."""
    n, k = config.n_points, config.n_categories
    if config.n_shards == 1:
        u = make_rng(config.seed).random((n, k))
        return consensus_rows(shares_from_uniforms(u, config.sampler))
    children = np.random.SeedSequence(config.seed).spawn(config.n_shards)
    sizes = [n // config.n_shards + (1 if i < n % config.n_shards else 0) for i in range(config.n_shards)]
    parts = []
    for child, size in zip(children, sizes):
        rng = np.random.Generator(np.random.PCG64(child))
        parts.append(consensus_rows(shares_from_uniforms(rng.random((size, k)), config.sampler)))
    return np.concatenate(parts)


def quantile(sorted_values: np.ndarray, p: float) -> float:
    """Linear interpolation between order statistics at 1-based position p*(n-1)+1."""
    n = sorted_values.size
    h = p * (n - 1)
    lo = math.floor(h)
    hi = min(lo + 1, n - 1)
    return float(sorted_values[lo] + (h - lo) * (sorted_values[hi] - sorted_values[lo]))


def summary_stats(sample: Sequence[float]) -> SummaryStats:
    x = np.asarray(sample, dtype=float)
    if x.size == 0:
        raise EmptySample("summary_stats needs at least one value")
    xs = np.sort(x)
    lo, hi = float(xs[0]), float(xs[-1])
    mean = math.fsum(xs) / xs.size
    mean = min(max(mean, lo), hi)
    std = float(np.std(xs, ddof=1)) if xs.size > 1 else 0.0
    q1, q3 = quantile(xs, 0.25), quantile(xs, 0.75)
    return SummaryStats(mean=mean, std_dev=std, min=lo, max=hi, range=hi - lo, iqr=q3 - q1)
