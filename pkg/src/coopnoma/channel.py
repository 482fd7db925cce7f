"""Rayleigh-fading channel sampling with counter-based reproducibility.

Each Monte-Carlo trial owns one Philox counter block: trial ``i`` of master
seed ``s`` always consumes the four 64-bit words of ``Philox(key=s,
counter=i)``, no matter how trials are batched or distributed over
workers. Squared channel magnitudes of Rayleigh fading are exponential,
so gains are drawn by inverting the exponential CDF on a uniform variate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import ConfigError

# Number of independent gains per realization; one Philox block (4 x
# uint64 -> 4 doubles) covers exactly one trial.
_GAINS_PER_TRIAL = 4


@dataclass(frozen=True)
class ChannelRealization:
    """One draw of the four squared channel magnitudes (linear gains)."""

    g1: float   # BS -> UE1
    gr: float   # BS -> relay
    gr1: float  # relay -> UE1
    gr2: float  # relay -> UE2

    def as_array(self) -> np.ndarray:
        return np.array([self.g1, self.gr, self.gr1, self.gr2])


def _check_variances(variances) -> np.ndarray:
    var = np.asarray(variances, dtype=float)
    if var.shape != (_GAINS_PER_TRIAL,):
        raise ConfigError(f"expected 4 variances, got shape {var.shape}")
    if np.any(var <= 0):
        raise ConfigError(f"variances must be > 0, got {var}")
    return var


def sample_gain_block(variances, seed: int, start_trial: int, n_trials: int) -> np.ndarray:
    """Gains for trials [start_trial, start_trial + n_trials) as an (n, 4) array.

    Row ``j`` is bit-identical to ``sample_realization(variances, seed,
    start_trial + j)``; concatenating blocks of any size reproduces the
    same trial sequence.
    """
    var = _check_variances(variances)
    if n_trials < 0 or start_trial < 0 or seed < 0:
        raise ConfigError("seed, start_trial and n_trials must be >= 0")
    gen = np.random.Generator(np.random.Philox(key=seed, counter=start_trial))
    u = gen.random((n_trials, _GAINS_PER_TRIAL))
    # inverse CDF of Exp(mean=var); log1p keeps u -> 1 finite and u = 0 exact
    return -var * np.log1p(-u)


def sample_realization(variances, seed: int, trial_index: int) -> ChannelRealization:
    """Draw the four independent channel gains of one trial."""
    g = sample_gain_block(variances, seed, trial_index, 1)[0]
    return ChannelRealization(g1=g[0], gr=g[1], gr1=g[2], gr2=g[3])
