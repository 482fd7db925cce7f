"""Self-check property suite behind the ``validate`` CLI subcommand.

Each property measures something the closed forms must satisfy against
an independent route (quadrature oracles, limits, algebraic identities)
and reports one pass/fail line with the measured value. Thresholds are
deliberately tighter than the acceptance-level tolerances where that
makes the suite sensitive to small regressions; in particular the relay
oracle check fails if the Bessel evaluation drifts by as little as 1e-6
relative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analytic import (
    delta_r,
    k1_quadrature,
    p_out_approx,
    p_out_asymptotic,
    quadrature_oracle_b,
    theta_r,
)
from .bessel import bessel_k1
from .config import CaseLabel, SystemConfig, classify_case, db_to_linear, linear_to_db, rate_threshold
from .oma import high_snr_slope
from .scenarios import builtin_scenarios


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str


def random_case_ab_config(rng: np.random.Generator, snr_db_range=(10.0, 40.0)) -> SystemConfig:
    """A random valid config guaranteed to avoid the outage-certain split."""
    r2 = rng.uniform(0.3, 1.2)
    f2 = rate_threshold(r2)
    lam1_cap = min(0.5, 1.0 / (1.0 + f2)) * 0.9
    return SystemConfig(
        total_power=db_to_linear(rng.uniform(*snr_db_range)),
        noise_power=1.0,
        lambda1=rng.uniform(0.05, lam1_cap),
        lambda_relay=rng.uniform(0.1, 1.2),
        rate_ue1=rng.uniform(0.3, 1.5),
        rate_ue2=r2,
        d_bs_ue1=rng.uniform(15.0, 60.0),
        d_bs_relay=rng.uniform(15.0, 60.0),
        d_relay_ue1=rng.uniform(15.0, 60.0),
        d_relay_ue2=rng.uniform(15.0, 60.0),
        d_ref=20.0,
        path_loss_exp=2.0,
    )


def random_any_config(rng: np.random.Generator) -> SystemConfig:
    """Any valid config; the outage-certain split is allowed."""
    return SystemConfig(
        total_power=db_to_linear(rng.uniform(0.0, 45.0)),
        noise_power=1.0,
        lambda1=rng.uniform(0.05, 0.49),
        lambda_relay=rng.uniform(0.1, 1.2),
        rate_ue1=rng.uniform(0.3, 1.5),
        rate_ue2=rng.uniform(0.3, 1.2),
        d_bs_ue1=rng.uniform(15.0, 60.0),
        d_bs_relay=rng.uniform(15.0, 60.0),
        d_relay_ue1=rng.uniform(15.0, 60.0),
        d_relay_ue2=rng.uniform(15.0, 60.0),
        d_ref=20.0,
        path_loss_exp=2.0,
    )


def _linear_p_b(cfg: SystemConfig, k1_fn: Callable[[float], float]) -> float:
    """P_B assembled in linear space from an injectable K1 evaluation."""
    th = theta_r(cfg)
    lam = cfg.lambda_relay
    mu = 2.0 * th / math.sqrt(lam * cfg.sigma_r_sq * cfg.sigma_r2_sq)
    delta = th / cfg.sigma_r_sq + th / (lam * cfg.sigma_r2_sq)
    return mu * math.exp(-delta) * k1_fn(mu)


def check_oracle_equivalence(k1_fn: Callable[[float], float] = bessel_k1,
                             n_configs: int = 20, seed: int = 2024,
                             limit: float = 5e-7) -> PropertyResult:
    """Relay-path closed form against direct 2-D density quadrature."""
    rng = np.random.default_rng(seed)
    configs = [random_case_ab_config(rng, snr_db_range=(8.0, 32.0))
               for _ in range(n_configs - 1)]
    # one deep high-SNR point where P_B ~ 1 maximizes Bessel sensitivity
    configs.append(builtin_scenarios()["case-b1"].cfg.with_total_power(db_to_linear(60.0)))
    worst = 0.0
    for cfg in configs:
        diff = abs(quadrature_oracle_b(cfg) - (1.0 - _linear_p_b(cfg, k1_fn)))
        worst = max(worst, diff)
    return PropertyResult(
        "oracle-equivalence-relay", worst < limit,
        f"max |quadrature - closed form| = {worst:.3e} (limit {limit:g}, "
        f"{len(configs)} configs)")


def check_k1_accuracy(k1_fn: Callable[[float], float] = bessel_k1,
                      n_points: int = 50, limit: float = 1e-10) -> PropertyResult:
    """K1 against its integral representation on log-spaced points."""
    xs = np.logspace(-3, math.log10(50.0), n_points)
    worst = 0.0
    for x in xs:
        ref = k1_quadrature(float(x))
        worst = max(worst, abs(k1_fn(float(x)) - ref) / ref)
    return PropertyResult(
        "k1-integral-accuracy", worst < limit,
        f"max relative error = {worst:.3e} over [1e-3, 50] (limit {limit:g})")


def check_branch_continuity(limit: float = 1e-4) -> PropertyResult:
    """Generic branch converges to the matched branch at the boundary."""
    worst = 0.0
    for snr_db in range(10, 41, 5):
        base = builtin_scenarios()["case-a"].cfg.with_total_power(db_to_linear(snr_db))
        matched = p_out_approx(base)
        assert matched.case is CaseLabel.CASE_A
        for sign in (+1.0, -1.0):
            # move d_relay_ue1 so lambda*sr1^2 = sigma1^2 * (1 + sign*1e-5)
            target = base.sigma1_sq * (1.0 + sign * 1e-5) / base.lambda_relay
            d = base.d_ref * target ** (-1.0 / base.path_loss_exp)
            import dataclasses

            cfg = dataclasses.replace(base, d_relay_ue1=d)
            off = p_out_approx(cfg)
            assert off.case is CaseLabel.CASE_B
            worst = max(worst, abs(off.p_out_approx - matched.p_out_approx))
    return PropertyResult(
        "branch-continuity", worst < limit,
        f"max |generic - matched| = {worst:.3e} at +/-1e-5 offsets (limit {limit:g})")


def check_factorization(n_configs: int = 2000, seed: int = 7) -> PropertyResult:
    """1 - p_out equals p_a * p_b to a few machine epsilons."""
    rng = np.random.default_rng(seed)
    limit = 10 * np.finfo(float).eps
    worst = 0.0
    for _ in range(n_configs):
        b = p_out_approx(random_case_ab_config(rng))
        worst = max(worst, abs((1.0 - b.p_out_approx) - b.p_a * b.p_b))
    return PropertyResult(
        "factorization", worst < limit,
        f"max |(1 - p_out) - p_a*p_b| = {worst:.3e} (limit {limit:.2e}, "
        f"{n_configs} configs)")


def check_diversity_slope(lo: float = -1.05, hi: float = -0.95) -> PropertyResult:
    """Log-log slope of the approximation is -1 in the high-SNR decade."""
    cfg = builtin_scenarios()["case-b1"].cfg
    grid = [50.0, 55.0, 60.0, 65.0, 70.0]
    pouts = [p_out_approx(cfg.with_total_power(db_to_linear(db))).p_out_approx
             for db in grid]
    slope = high_snr_slope(grid, pouts)
    return PropertyResult(
        "diversity-order-slope", lo <= slope <= hi,
        f"slope = {slope:.5f} over 50-70 dB (window [{lo}, {hi}])")


def check_asymptote_ratio(lo: float = 0.95, hi: float = 1.05) -> PropertyResult:
    """Asymptote and closed form agree at transmit SNR 1e6."""
    details = []
    ok = True
    for name in ("case-a", "case-b1", "case-b2"):
        cfg = builtin_scenarios()[name].cfg.with_total_power(1e6)
        ratio = p_out_asymptotic(cfg) / p_out_approx(cfg).p_out_approx
        ok = ok and lo <= ratio <= hi
        details.append(f"{name}: {ratio:.4f}")
    return PropertyResult(
        "asymptote-ratio", ok,
        f"asymptote/approximation at 60 dB: {', '.join(details)} (window [{lo}, {hi}])")


def check_power_monotonicity() -> PropertyResult:
    """Closed form never increases with transmit power."""
    cfg = builtin_scenarios()["case-b1"].cfg
    grid = [float(db) for db in range(10, 41)]
    pouts = [p_out_approx(cfg.with_total_power(db_to_linear(db))).p_out_approx
             for db in grid]
    diffs = [b - a for a, b in zip(pouts, pouts[1:])]
    worst = max(diffs)
    return PropertyResult(
        "power-monotonicity", worst <= 0.0,
        f"max increase over 10-40 dB grid = {worst:.3e} (must be <= 0)")


def check_probability_range(n_configs: int = 10_000, seed: int = 11) -> PropertyResult:
    """Every assembled probability stays in [0, 1] on random configs."""
    rng = np.random.default_rng(seed)
    for i in range(n_configs):
        b = p_out_approx(random_any_config(rng))
        values = [b.p_out_approx] + [v for v in (b.p_a, b.p_b) if v is not None]
        if any(not 0.0 <= v <= 1.0 for v in values):
            return PropertyResult(
                "probability-range", False, f"out-of-range value at config {i}: {b}")
    return PropertyResult(
        "probability-range", True, f"all probabilities in [0,1] ({n_configs} configs)")


def check_relay_ordering(n_pairs: int = 100, seed: int = 13) -> PropertyResult:
    """With the variance product fixed, the relay-near-UE2 placement wins.

    Where sr^2 < sr2^2 (relay farther from the BS than from UE2) the
    high-SNR coefficient must be strictly smaller than for the swapped
    placement, provided the relay power fraction is below one.
    """
    import dataclasses

    scen = builtin_scenarios()
    d1 = delta_r(scen["case-b2"].cfg)  # sr^2 < sr2^2 placement
    d2 = delta_r(scen["case-b1"].cfg)  # swapped
    ok = d1 < d2
    rng = np.random.default_rng(seed)
    checked = 0
    while checked < n_pairs:
        cfg = random_case_ab_config(rng)
        if cfg.lambda_relay >= 1.0:
            continue
        lo, hi = sorted((rng.uniform(15.0, 60.0), rng.uniform(15.0, 60.0)))
        if hi - lo < 1.0:
            continue
        near_ue2 = dataclasses.replace(cfg, d_bs_relay=hi, d_relay_ue2=lo)
        near_bs = dataclasses.replace(cfg, d_bs_relay=lo, d_relay_ue2=hi)
        if not delta_r(near_ue2) < delta_r(near_bs):
            return PropertyResult(
                "relay-location-ordering", False,
                f"violated for d_pair=({lo:.2f},{hi:.2f}) lambda={cfg.lambda_relay:.3f}")
        checked += 1
    return PropertyResult(
        "relay-location-ordering", ok,
        f"built-in pair: {d1:.4f} < {d2:.4f}; holds on {n_pairs} random fixed-product pairs")


def check_db_roundtrip(n_values: int = 200, seed: int = 17,
                       limit: float = 1e-12) -> PropertyResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_values):
        x = 10.0 ** rng.uniform(-6, 6)
        worst = max(worst, abs(db_to_linear(linear_to_db(x)) - x) / x)
    return PropertyResult(
        "db-linear-roundtrip", worst < limit,
        f"max relative roundtrip error = {worst:.3e} (limit {limit:g})")


def run_all(k1_fn: Callable[[float], float] = bessel_k1) -> list[PropertyResult]:
    """Run every property; ``k1_fn`` lets the harness inject perturbations."""
    return [
        check_k1_accuracy(k1_fn),
        check_oracle_equivalence(k1_fn),
        check_branch_continuity(),
        check_factorization(),
        check_diversity_slope(),
        check_asymptote_ratio(),
        check_power_monotonicity(),
        check_probability_range(),
        check_relay_ordering(),
        check_db_roundtrip(),
    ]


def format_report(results: list[PropertyResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:28s} {r.detail}")
    n_fail = sum(not r.passed for r in results)
    lines.append(f"{len(results) - n_fail}/{len(results)} properties passed")
    return "\n".join(lines)
