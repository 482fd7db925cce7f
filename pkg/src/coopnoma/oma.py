"""Three-slot cooperative-OMA baseline with brute-force power split.

Slot structure: the BS serves UE1 directly in slot 1 with power
``lambda1_oma * P_T``, sends the indirect user's signal to the relay in
slot 2 with the remaining BS power, and the relay amplifies-and-forwards
to UE2 in slot 3 with power ``lambda_relay * P_T``. UE1 does not listen
during slots 2-3 and there is no superposition, so the UE2 link is the
interference-free amplify-and-forward chain. Three equal slots instead
of two raise the per-slot rate requirement to 1.5x, i.e. thresholds
become 2^(3R) - 1.

The split ``lambda1_oma`` has no closed-form optimum here; it is found
by a grid scan under common random numbers so the argmin is noise-free
and reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import sample_gain_block
from .config import ConfigError, SystemConfig
from .montecarlo import CHUNK_TRIALS, OutageEstimate, _ci95


def oma_rate_threshold(rate: float) -> float:
    """SINR threshold 2^(3R) - 1 for a rate delivered in one of three slots."""
    if rate < 0:
        raise ConfigError(f"rate must be >= 0, got {rate}")
    return 2.0 ** (3.0 * rate) - 1.0


@dataclass(frozen=True)
class OmaConfig:
    """Shared physical parameters plus the OMA-specific BS power split."""

    base: SystemConfig
    lambda1_oma: float

    def __post_init__(self):
        if not 0.0 < self.lambda1_oma < 1.0:
            raise ConfigError(f"lambda1_oma must be in (0,1), got {self.lambda1_oma}")


def _outage_counts(gains, base: SystemConfig, lambda1_oma: float) -> tuple[int, int, int]:
    """Per-chunk outage counts (ue1, ue2, overall) for one power split."""
    g1, gr, gr2 = gains[:, 0], gains[:, 1], gains[:, 3]
    n0 = base.noise_power
    p1 = lambda1_oma * base.total_power
    p2 = (1.0 - lambda1_oma) * base.total_power
    p_relay = base.p_relay

    ue1 = g1 * p1 / n0 < oma_rate_threshold(base.rate_ue1)

    # interference-free AF chain; the relay normalizes its slot-2 receive power
    rho2 = p_relay / (p2 * gr + n0)
    gamma_2 = gr2 * gr * p2 / ((gr2 + 1.0 / rho2) * n0)
    ue2 = gamma_2 < oma_rate_threshold(base.rate_ue2)

    overall = ue1 | ue2
    return int(ue1.sum()), int(ue2.sum()), int(overall.sum())


def oma_outage_mc(ocfg: OmaConfig, n_trials: int, seed: int) -> OutageEstimate:
    """Monte-Carlo outage of the three-slot scheme."""
    if n_trials < 1:
        raise ConfigError(f"n_trials must be >= 1, got {n_trials}")
    variances = ocfg.base.variances()
    c1 = c2 = c_all = 0
    for start in range(0, n_trials, CHUNK_TRIALS):
        count = min(CHUNK_TRIALS, n_trials - start)
        gains = sample_gain_block(variances, seed, start, count)
        a, b, o = _outage_counts(gains, ocfg.base, ocfg.lambda1_oma)
        c1 += a
        c2 += b
        c_all += o
    p_hat = c_all / n_trials
    return OutageEstimate(p_overall=p_hat, p_ue1=c1 / n_trials, p_ue2=c2 / n_trials,
                          ci_halfwidth_95=_ci95(p_hat, n_trials),
                          n_trials=n_trials, seed=seed)


def scan_lambda1(ocfg_base: OmaConfig, grid_step: float, n_trials: int,
                 seed: int) -> list[tuple[float, OutageEstimate]]:
    """Outage estimate at every grid split, under common random numbers.

    The channel block of each chunk is drawn once and reused for every
    grid point, which removes sampling noise from comparisons across the
    grid.
    """
    if not 0.0 < grid_step < 0.5:
        raise ConfigError(f"grid_step must be in (0, 0.5), got {grid_step}")
    if n_trials < 1:
        raise ConfigError(f"n_trials must be >= 1, got {n_trials}")
    n_points = round(1.0 / grid_step) - 1
    grid = [grid_step * k for k in range(1, n_points + 1)]
    if not grid:
        raise ConfigError(f"empty lambda1 grid for grid_step={grid_step}")

    base = ocfg_base.base
    variances = base.variances()
    counts = [[0, 0, 0] for _ in grid]
    for start in range(0, n_trials, CHUNK_TRIALS):
        count = min(CHUNK_TRIALS, n_trials - start)
        gains = sample_gain_block(variances, seed, start, count)
        for j, lam1 in enumerate(grid):
            a, b, o = _outage_counts(gains, base, lam1)
            counts[j][0] += a
            counts[j][1] += b
            counts[j][2] += o

    out = []
    for lam1, (a, b, o) in zip(grid, counts):
        p_hat = o / n_trials
        out.append((lam1, OutageEstimate(
            p_overall=p_hat, p_ue1=a / n_trials, p_ue2=b / n_trials,
            ci_halfwidth_95=_ci95(p_hat, n_trials), n_trials=n_trials, seed=seed)))
    return out


def optimize_lambda1(ocfg_base: OmaConfig, grid_step: float, n_trials: int,
                     seed: int) -> tuple[float, OutageEstimate]:
    """Brute-force the BS power split; ties break toward the smaller split."""
    scan = scan_lambda1(ocfg_base, grid_step, n_trials, seed)
    best_lam1, best_est = scan[0]
    for lam1, est in scan[1:]:
        if est.p_overall < best_est.p_overall:
            best_lam1, best_est = lam1, est
    return best_lam1, best_est


def high_snr_slope(snr_db: list[float], p_out: list[float]) -> float:
    """Least-squares slope of log10(p_out) against log10(snr)."""
    if len(snr_db) != len(p_out) or len(snr_db) < 2:
        raise ConfigError("need at least two (snr, p_out) pairs")
    xs = [db / 10.0 for db in snr_db]  # log10 of linear SNR
    ys = [math.log10(p) for p in p_out]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den
