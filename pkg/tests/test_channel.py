"""Channel sampler: distributional correctness and reproducibility."""

import numpy as np
import pytest
from scipy import stats

from coopnoma import ConfigError, sample_gain_block, sample_realization

UNIT = (1.0, 1.0, 1.0, 1.0)


def test_same_seed_and_trial_bit_identical():
    a = sample_realization(UNIT, seed=42, trial_index=7)
    b = sample_realization(UNIT, seed=42, trial_index=7)
    assert a == b


def test_different_trials_differ():
    a = sample_realization(UNIT, seed=42, trial_index=7)
    b = sample_realization(UNIT, seed=42, trial_index=8)
    c = sample_realization(UNIT, seed=43, trial_index=7)
    assert a != b and a != c


def test_block_rows_match_single_trials():
    block = sample_gain_block(UNIT, seed=3, start_trial=100, n_trials=16)
    for j in range(16):
        single = sample_realization(UNIT, seed=3, trial_index=100 + j)
        assert np.array_equal(block[j], single.as_array())


def test_block_concatenation_invariant():
    whole = sample_gain_block(UNIT, seed=9, start_trial=0, n_trials=1000)
    parts = np.vstack([
        sample_gain_block(UNIT, seed=9, start_trial=0, n_trials=137),
        sample_gain_block(UNIT, seed=9, start_trial=137, n_trials=600),
        sample_gain_block(UNIT, seed=9, start_trial=737, n_trials=263),
    ])
    assert np.array_equal(whole, parts)


def test_sample_mean_matches_variance():
    block = sample_gain_block(UNIT, seed=11, start_trial=0, n_trials=100_000)
    for col in range(4):
        assert 0.99 < block[:, col].mean() < 1.01


def test_empirical_cdf_is_exponential():
    # KS statistic below the 1% critical value 1.628/sqrt(n)
    variances = (0.5, 1.0, 2.0, 0.25)
    n = 100_000
    block = sample_gain_block(variances, seed=21, start_trial=0, n_trials=n)
    crit = 1.628 / np.sqrt(n)
    for col, var in enumerate(variances):
        d_stat = stats.kstest(block[:, col], "expon", args=(0.0, var)).statistic
        assert d_stat < crit, f"column {col}: KS={d_stat:.5f} >= {crit:.5f}"


def test_gains_pairwise_uncorrelated():
    block = sample_gain_block(UNIT, seed=31, start_trial=0, n_trials=100_000)
    corr = np.corrcoef(block.T)
    off_diag = corr[~np.eye(4, dtype=bool)]
    assert np.abs(off_diag).max() < 0.02


def test_vanishing_variance_gives_vanishing_gain():
    block = sample_gain_block((1e-300, 1.0, 1.0, 1.0), seed=1, start_trial=0, n_trials=100)
    assert np.all(block[:, 0] < 1e-290)
    assert np.all(block >= 0.0)


def test_rejects_nonpositive_variances():
    with pytest.raises(ConfigError):
        sample_realization((1.0, 0.0, 1.0, 1.0), seed=1, trial_index=0)
    with pytest.raises(ConfigError):
        sample_gain_block((1.0, 1.0, -2.0, 1.0), seed=1, start_trial=0, n_trials=4)
