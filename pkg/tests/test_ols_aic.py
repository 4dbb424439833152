import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from likert_consensus.errors import NonPositiveSSR, RankDeficient, TooFewObservations
from likert_consensus.forecast_lab import aic, ols_fit

X3 = np.column_stack([np.ones(3), [0.0, 1.0, 2.0]])


def test_exact_line():
    res = ols_fit([1, 2, 3], X3)
    assert res.coefficients == pytest.approx([1, 1], abs=1e-12)
    assert res.ssr == pytest.approx(0, abs=1e-24)


def test_hand_normal_equations():
    # X'X = [[3, 3], [3, 5]], X'y = [5, 6] -> (7/6, 1/2); residuals (-1/6, 1/3, -1/6)
    res = ols_fit([1, 2, 2], X3)
    assert res.coefficients == pytest.approx([7 / 6, 1 / 2], abs=1e-12)
    assert res.ssr == pytest.approx(1 / 6, abs=1e-12)


@given(st.integers(0, 10_000), st.integers(7, 60), st.integers(1, 4))
def test_residuals_orthogonal(seed, n, k):
    rng = np.random.default_rng(seed)
    X = np.column_stack([np.ones(n), rng.normal(size=(n, k))])
    y = rng.normal(size=n)
    res = ols_fit(y, X)
    assert np.abs(X.T @ res.residuals).max() < 1e-8
    assert res.ssr == pytest.approx(float(res.residuals @ res.residuals))


def test_rank_deficient():
    X = np.column_stack([np.ones(5), np.arange(5.0), 2 * np.arange(5.0)])
    with pytest.raises(RankDeficient):
        ols_fit(np.arange(5.0), X)
    res = ols_fit(np.arange(5.0), X, allow_rank_deficient=True)
    assert res.ssr == pytest.approx(0, abs=1e-20)


def test_too_few_observations():
    with pytest.raises(TooFewObservations):
        ols_fit([1, 2], np.ones((2, 2)))


class TestAic:
    def test_log_one(self):
        assert aic(10.0, 10, 2) == 4.0

    def test_ols_example(self):
        # 40-digit mpmath value of 3*ln(1/18) + 4
        assert aic(1 / 6, 3, 2) == pytest.approx(-4.671115273688494076623, abs=1e-12)

    @given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
    def test_monotone_in_ssr(self, a, b):
        if a < b:
            assert aic(a, 50, 3) < aic(b, 50, 3)

    def test_nonpositive(self):
        with pytest.raises(NonPositiveSSR):
            aic(0.0, 10, 2)

    def test_bad_counts(self):
        with pytest.raises(ValueError):
            aic(1.0, 2, 2)
