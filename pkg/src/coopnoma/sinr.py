"""Per-realization relay gain, decoding SINRs and the outage event.

The three SINRs are computed directly from the channel power gains; no
symbols or noise waveforms are ever sampled, because the outage event
depends on the realization only through these ratios.

Signal path: the BS superimposes both users' signals; UE1 combines its
direct observation with the relayed copy (effective relayed gain
``rho^2 * gr1 * gr``), decodes the stronger signal first and subtracts it
before decoding its own. UE2 sees only the relayed copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config import ConfigError, SystemConfig, rate_threshold


class GainModel(Enum):
    """How the squared relay amplifying gain rho^2 is evaluated."""

    EXACT = "exact"                     # P_R / (P_T * gr + N0)
    HIGH_SNR_APPROX = "high-snr"        # P_R / (P_T * gr) = lambda / gr


@dataclass(frozen=True)
class SinrTriple:
    gamma_12: float  # decoding the indirect user's signal at UE1
    gamma_1: float   # decoding UE1's own signal after cancellation
    gamma_2: float   # decoding at UE2


@dataclass(frozen=True)
class OutageFlags:
    ue1_outage: bool
    ue2_outage: bool
    overall_outage: bool


def amplify_gain_sq(gr: float, cfg: SystemConfig, mode: GainModel = GainModel.EXACT) -> float:
    """Squared relay amplifying gain rho^2 for a BS->relay gain draw."""
    if gr < 0:
        raise ConfigError(f"channel gain must be >= 0, got {gr}")
    if mode is GainModel.EXACT:
        return cfg.p_relay / (cfg.total_power * gr + cfg.noise_power)
    if mode is GainModel.HIGH_SNR_APPROX:
        if gr == 0:
            raise ConfigError("high-SNR rho^2 approximation requires gr > 0")
        return cfg.lambda_relay / gr
    raise ConfigError(f"unknown gain model {mode!r}")


def sinr_block(gains: np.ndarray, cfg: SystemConfig):
    """Vectorized SINRs for an (n, 4) gain block.

    Returns (gamma_12, gamma_1, gamma_2, gamma_1_relaxed) where
    gamma_1_relaxed = (g1 + |h~1|^2) * P1 / N0 is the noise-amplification-
    free variant of gamma_1 used by the lower-bound outage event.
    """
    g1, gr, gr1, gr2 = gains[:, 0], gains[:, 1], gains[:, 2], gains[:, 3]
    p1, p2, n0 = cfg.p1, cfg.p2, cfg.noise_power
    rho2 = cfg.p_relay / (cfg.total_power * gr + n0)
    gt1 = rho2 * gr1 * gr                       # relayed effective gain at UE1
    s = g1 + gt1
    amp = rho2 * gr1 + 1.0                      # relay noise amplification
    den_ue1 = (gt1 * amp + g1) * n0

    s_sq = s * s
    zero = np.zeros_like(s)
    # den_ue1 == 0 only when every UE1-side gain is zero
    gamma_12 = np.divide(s_sq * p2, s_sq * p1 + den_ue1,
                         out=zero.copy(), where=den_ue1 > 0)
    gamma_1 = np.divide(s_sq * p1, den_ue1, out=zero.copy(), where=den_ue1 > 0)

    a = gr2 * gr
    den_ue2 = a * p1 + (gr2 + 1.0 / rho2) * n0  # always > 0 (rho^2 finite)
    gamma_2 = a * p2 / den_ue2

    gamma_1_relaxed = s * p1 / n0
    return gamma_12, gamma_1, gamma_2, gamma_1_relaxed


def outage_block(gains: np.ndarray, cfg: SystemConfig, lower_bound: bool = False):
    """Per-trial outage indicators (ue1, ue2, overall) for a gain block.

    With ``lower_bound=True`` the UE1 event uses the relaxed SINR and the
    first-stage decoding event at UE1 is dropped, which can only shrink
    the outage set.
    """
    f1 = rate_threshold(cfg.rate_ue1)
    f2 = rate_threshold(cfg.rate_ue2)
    gamma_12, gamma_1, gamma_2, gamma_1_relaxed = sinr_block(gains, cfg)
    if lower_bound:
        ue1 = gamma_1_relaxed < f1
    else:
        ue1 = (gamma_12 < f2) | (gamma_1 < f1)
    ue2 = gamma_2 < f2
    return ue1, ue2, ue1 | ue2


def compute_sinrs(ch, cfg: SystemConfig) -> SinrTriple:
    """Exact SINR triple for one realization (exact rho^2)."""
    g = np.array([[ch.g1, ch.gr, ch.gr1, ch.gr2]], dtype=float)
    gamma_12, gamma_1, gamma_2, _ = sinr_block(g, cfg)
    return SinrTriple(gamma_12=float(gamma_12[0]), gamma_1=float(gamma_1[0]),
                      gamma_2=float(gamma_2[0]))


def evaluate_outage(ch, cfg: SystemConfig) -> OutageFlags:
    """Outage flags of one realization against the rate thresholds."""
    g = np.array([[ch.g1, ch.gr, ch.gr1, ch.gr2]], dtype=float)
    ue1, ue2, overall = outage_block(g, cfg)
    return OutageFlags(ue1_outage=bool(ue1[0]), ue2_outage=bool(ue2[0]),
                       overall_outage=bool(overall[0]))
