"""Outage analysis for a two-user cooperative NOMA downlink with an AF relay.

Library layers: validated system configuration, reproducible Rayleigh
channel sampling, exact per-realization SINRs and outage events, the
closed-form outage approximation with its high-SNR asymptote, a
Monte-Carlo engine, and the three-slot cooperative-OMA baseline. The
``coopnoma`` CLI wraps everything into scenario sweeps that emit CSV
curves plus rendered figures.
"""

__version__ = "0.1.0"

from .analytic import (
    AnalyticBreakdown,
    OutageCertainError,
    delta_r,
    gamma_bar_1,
    k1_quadrature,
    p_component_a,
    p_component_b,
    p_out_approx,
    p_out_asymptotic,
    quadrature_oracle_b,
    theta_r,
)
from .bessel import bessel_k1, bessel_k1e
from .channel import ChannelRealization, sample_gain_block, sample_realization
from .config import (
    CaseLabel,
    ConfigError,
    SystemConfig,
    classify_case,
    db_to_linear,
    linear_to_db,
    rate_threshold,
    variance_from_distance,
)
from .montecarlo import OutageEstimate, SweepPoint, Variant, estimate_outage, sweep_snr
from .oma import OmaConfig, oma_outage_mc, oma_rate_threshold, optimize_lambda1
from .scenarios import Scenario, builtin_scenarios, load_scenario_file, resolve_scenario
from .sinr import (
    GainModel,
    OutageFlags,
    SinrTriple,
    amplify_gain_sq,
    compute_sinrs,
    evaluate_outage,
)

__all__ = [
    "AnalyticBreakdown",
    "CaseLabel",
    "ChannelRealization",
    "ConfigError",
    "GainModel",
    "OmaConfig",
    "OutageCertainError",
    "OutageEstimate",
    "OutageFlags",
    "Scenario",
    "SinrTriple",
    "SweepPoint",
    "SystemConfig",
    "Variant",
    "amplify_gain_sq",
    "bessel_k1",
    "bessel_k1e",
    "builtin_scenarios",
    "classify_case",
    "compute_sinrs",
    "db_to_linear",
    "delta_r",
    "estimate_outage",
    "evaluate_outage",
    "gamma_bar_1",
    "k1_quadrature",
    "linear_to_db",
    "load_scenario_file",
    "oma_outage_mc",
    "oma_rate_threshold",
    "optimize_lambda1",
    "p_component_a",
    "p_component_b",
    "p_out_approx",
    "p_out_asymptotic",
    "quadrature_oracle_b",
    "rate_threshold",
    "resolve_scenario",
    "sample_gain_block",
    "sample_realization",
    "sweep_snr",
    "theta_r",
    "variance_from_distance",
]
