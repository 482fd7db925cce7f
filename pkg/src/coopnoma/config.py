"""System parameters, derived quantities and scenario classification.

All powers are stored in linear units; dB enters and leaves only at the
CLI boundary. A validated ``SystemConfig`` is immutable and safe to share
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# Relative tolerance for deciding the variance-matched branch
# (sigma_1^2 == lambda * sigma_r1^2). Exact equality is measure-zero, so
# matched scenarios must be built from analytically solved distances.
CASE_A_EQUALITY_TOL = 1e-9


class ConfigError(ValueError):
    """Raised for invalid or inconsistent system parameters."""


class CaseLabel(str, Enum):
    """Power-allocation regime of the closed-form outage approximation.

    CASE_A: variance-matched UE1 branch (sigma_1^2 == lambda*sigma_r1^2)
    CASE_B: generic branch
    CASE_C: outage-certain power split (P2/P1 <= f(R2))
    """

    CASE_A = "CaseA"
    CASE_B = "CaseB"
    CASE_C = "CaseC"


def db_to_linear(x_db: float) -> float:
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    if x <= 0:
        raise ConfigError(f"cannot convert non-positive value {x} to dB")
    return 10.0 * math.log10(x)


def rate_threshold(rate: float) -> float:
    """SINR threshold f(R) = 2^(2R) - 1 for rate R over the two-slot frame."""
    if rate < 0:
        raise ConfigError(f"rate must be >= 0, got {rate}")
    return 2.0 ** (2.0 * rate) - 1.0


def variance_from_distance(d: float, d_ref: float, alpha: float) -> float:
    """Channel variance (d / d_ref)^(-alpha) from the distance power law."""
    if d <= 0 or d_ref <= 0:
        raise ConfigError(f"distances must be > 0, got d={d}, d_ref={d_ref}")
    if alpha < 0:
        raise ConfigError(f"path-loss exponent must be >= 0, got {alpha}")
    return (d / d_ref) ** (-alpha)


@dataclass(frozen=True)
class SystemConfig:
    """Physical parameters of one scenario.

    total_power   P_T, linear (ratio against noise_power gives the SNR)
    noise_power   N0, linear
    lambda1       P1/P_T, BS power share of the direct-link user's signal
    lambda_relay  P_R/P_T, relay power as a fraction of the BS power
    rate_ue1/2    target rates, bit/s/Hz over the whole two-slot frame
    d_*           link distances in meters
    d_ref         reference distance of the power law
    path_loss_exp power-law exponent alpha
    """

    total_power: float
    noise_power: float
    lambda1: float
    lambda_relay: float
    rate_ue1: float
    rate_ue2: float
    d_bs_ue1: float
    d_bs_relay: float
    d_relay_ue1: float
    d_relay_ue2: float
    d_ref: float
    path_loss_exp: float

    def __post_init__(self):
        import dataclasses

        for f in dataclasses.fields(self):
            if not math.isfinite(getattr(self, f.name)):
                raise ConfigError(f"{f.name} must be finite, got {getattr(self, f.name)}")
        if self.total_power <= 0 or self.noise_power <= 0:
            raise ConfigError("total_power and noise_power must be > 0")
        if not 0.0 < self.lambda1 < 1.0:
            raise ConfigError(f"lambda1 must be in (0,1), got {self.lambda1}")
        if self.lambda_relay <= 0:
            raise ConfigError(f"lambda_relay must be > 0, got {self.lambda_relay}")
        if self.rate_ue1 <= 0 or self.rate_ue2 <= 0:
            raise ConfigError("rates must be > 0")
        for name in ("d_bs_ue1", "d_bs_relay", "d_relay_ue1", "d_relay_ue2", "d_ref"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be > 0")
        if self.path_loss_exp < 0:
            raise ConfigError("path_loss_exp must be >= 0")
        # The SIC decoding order requires the indirect user's signal to
        # carry the larger power share; reordering silently would change
        # the scheme, so reject instead.
        if self.lambda1 >= 0.5:
            raise ConfigError(
                f"lambda1={self.lambda1} gives P1 >= P2; the superposition "
                "requires P1 < P2"
            )

    # -- derived powers ----------------------------------------------------
    @property
    def p1(self) -> float:
        return self.lambda1 * self.total_power

    @property
    def p2(self) -> float:
        return (1.0 - self.lambda1) * self.total_power

    @property
    def p_relay(self) -> float:
        return self.lambda_relay * self.total_power

    @property
    def snr(self) -> float:
        """Transmit SNR P_T / N0 (linear)."""
        return self.total_power / self.noise_power

    # -- derived channel variances ------------------------------------------
    @property
    def sigma1_sq(self) -> float:
        return variance_from_distance(self.d_bs_ue1, self.d_ref, self.path_loss_exp)

    @property
    def sigma_r_sq(self) -> float:
        return variance_from_distance(self.d_bs_relay, self.d_ref, self.path_loss_exp)

    @property
    def sigma_r1_sq(self) -> float:
        return variance_from_distance(self.d_relay_ue1, self.d_ref, self.path_loss_exp)

    @property
    def sigma_r2_sq(self) -> float:
        return variance_from_distance(self.d_relay_ue2, self.d_ref, self.path_loss_exp)

    def variances(self) -> tuple[float, float, float, float]:
        """(sigma_1^2, sigma_r^2, sigma_r1^2, sigma_r2^2)."""
        return (self.sigma1_sq, self.sigma_r_sq, self.sigma_r1_sq, self.sigma_r2_sq)

    def with_total_power(self, total_power: float) -> "SystemConfig":
        import dataclasses

        return dataclasses.replace(self, total_power=total_power)


def classify_case(cfg: SystemConfig, tol: float = CASE_A_EQUALITY_TOL) -> CaseLabel:
    """Map a validated config onto its power-allocation regime.

    The decision depends only on the power fractions, the UE2 rate and the
    link distances, so it is invariant under scaling of total_power.
    """
    f2 = rate_threshold(cfg.rate_ue2)
    # P2/P1 expressed through lambda1 keeps the test scale-free.
    if (1.0 - cfg.lambda1) / cfg.lambda1 <= f2:
        return CaseLabel.CASE_C
    s1 = cfg.sigma1_sq
    s_eff = cfg.lambda_relay * cfg.sigma_r1_sq
    if abs(s1 - s_eff) <= tol * s1:
        return CaseLabel.CASE_A
    return CaseLabel.CASE_B
