"""Closed-form outage approximation, high-SNR asymptote and oracles.

After replacing rho^2 by its medium/high-SNR form lambda/gr and dropping
the first-stage decoding event at UE1, the outage probability factors
into two independent events:

* UE1 side: g1 + lambda * gr1 < gbar1, a sum of two independent
  exponentials against the threshold gbar1 = f(R1) * N0 / P1.
* UE2 side: lambda * gr2 * (1 - theta/gr) <= theta, with
  theta = f(R2) * N0 / (P2 - f(R2) * P1).

The complement probabilities are

    P_A = (1 + gbar1/s1) exp(-gbar1/s1)                      matched case
        = eta exp(-gbar1/s1) + (1-eta) exp(-gbar1/(l*sr1))   generic case
    P_B = mu exp(-delta) K1(mu)

with s1 = sigma_1^2, l = lambda_relay, eta = s1/(s1 - l*sr1^2),
mu = 2 theta / sqrt(l * sr^2 * sr2^2) and delta = theta/sr^2 +
theta/(l*sr2^2), giving the approximation 1 - P_A * P_B; the split with
P2/P1 <= f(R2) is in outage with certainty. Both components are
assembled in log space so that deep high-SNR tails neither underflow nor
lose the complement 1 - P_A*P_B to cancellation.

``quadrature_oracle_b`` re-derives the UE2-side probability by direct
2-D integration of the exponential densities, fully independent of the
K1 implementation, and ``k1e_scaled_quadrature`` does the same for K1
itself via its integral representation (DLMF 10.32.9).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .bessel import bessel_k1, bessel_k1e
from .config import CaseLabel, ConfigError, SystemConfig, classify_case, rate_threshold

# Tolerated floating excursion of an assembled probability outside [0,1];
# anything larger indicates a formula bug and raises instead of clamping.
_PROB_SLACK = 1e-12


class OutageCertainError(ConfigError):
    """Requested a quantity that only exists outside the outage-certain split."""


def _require_case_ab(cfg: SystemConfig, what: str) -> CaseLabel:
    case = classify_case(cfg)
    if case is CaseLabel.CASE_C:
        raise OutageCertainError(
            f"{what} is undefined for an outage-certain power split "
            f"(P2/P1 <= f(R2))"
        )
    return case


def _check_prob(p: float, what: str) -> float:
    if p < -_PROB_SLACK or p > 1.0 + _PROB_SLACK:
        raise ArithmeticError(f"{what} = {p!r} is outside [0, 1]")
    return min(max(p, 0.0), 1.0)


def theta_r(cfg: SystemConfig) -> float:
    """Relay-path gain threshold theta = f(R2) N0 / (P2 - f(R2) P1).

    Rearranges gamma_2 < f(R2) under rho^2 ~ lambda/gr into the event
    lambda*gr2*(1 - theta/gr) <= theta. Positive whenever the split is
    not outage-certain.
    """
    _require_case_ab(cfg, "theta_r")
    f2 = rate_threshold(cfg.rate_ue2)
    return f2 * cfg.noise_power / (cfg.p2 - f2 * cfg.p1)


def gamma_bar_1(cfg: SystemConfig) -> float:
    """UE1 combined-gain threshold gbar1 = f(R1) N0 / P1."""
    return rate_threshold(cfg.rate_ue1) * cfg.noise_power / cfg.p1


def delta_r(cfg: SystemConfig) -> float:
    """High-SNR outage coefficient: p_out ~ delta_r / (P_T/N0).

    delta_r = f(R2) / (1 - lambda1*(1 + f(R2))) * (1/sr^2 + 1/(l*sr2^2)).
    Equals snr * (theta/sr^2 + theta/(l*sr2^2)) identically, which the
    test suite checks against ``theta_r``.
    """
    _require_case_ab(cfg, "delta_r")
    f2 = rate_threshold(cfg.rate_ue2)
    geom = 1.0 / cfg.sigma_r_sq + 1.0 / (cfg.lambda_relay * cfg.sigma_r2_sq)
    return f2 / (1.0 - cfg.lambda1 * (1.0 + f2)) * geom


def _log_p_component_a(cfg: SystemConfig, case: CaseLabel) -> float:
    """log P_A, assembled without cancellation in either branch."""
    s1 = cfg.sigma1_sq
    s_eff = cfg.lambda_relay * cfg.sigma_r1_sq
    g = gamma_bar_1(cfg)
    if case is CaseLabel.CASE_A:
        a = g / s1
        return math.log1p(a) - a
    a = g / s1
    b = g / s_eff
    eta = s1 / (s1 - s_eff)
    # factor out the slower-decaying exponential; the bracket stays > 0
    if a <= b:   # eta > 1
        d = b - a
        return -a + math.log(math.exp(-d) - eta * math.expm1(-d))
    d = a - b    # eta < 0
    return -b + math.log(1.0 + eta * math.expm1(-d))


def _log_p_component_b(cfg: SystemConfig) -> float:
    """log P_B = log(mu K1(mu)) - delta, scaled so no factor underflows."""
    th = theta_r(cfg)
    lam = cfg.lambda_relay
    mu = 2.0 * th / math.sqrt(lam * cfg.sigma_r_sq * cfg.sigma_r2_sq)
    delta = th / cfg.sigma_r_sq + th / (lam * cfg.sigma_r2_sq)
    # mu * K1e(mu) ~ 1 + mu for small mu and ~ sqrt(pi*mu/2) for large mu
    return math.log(mu * bessel_k1e(mu)) - mu - delta


def p_component_a(cfg: SystemConfig) -> float:
    """Probability that the UE1-side event avoids outage."""
    case = _require_case_ab(cfg, "p_component_a")
    return _check_prob(math.exp(_log_p_component_a(cfg, case)), "p_component_a")


def p_component_b(cfg: SystemConfig) -> float:
    """Probability that the UE2-side (relay path) event avoids outage."""
    _require_case_ab(cfg, "p_component_b")
    return _check_prob(math.exp(_log_p_component_b(cfg)), "p_component_b")


@dataclass(frozen=True)
class AnalyticBreakdown:
    """Closed-form approximation with every intermediate symbol recorded."""

    p_out_approx: float
    p_a: float | None
    p_b: float | None
    case: CaseLabel
    mu: float | None
    delta: float | None
    eta: float | None        # generic branch only
    theta_r: float | None
    gamma_bar_1: float


def p_out_approx(cfg: SystemConfig) -> AnalyticBreakdown:
    """Three-branch closed-form approximation of the overall outage."""
    case = classify_case(cfg)
    gb1 = gamma_bar_1(cfg)
    if case is CaseLabel.CASE_C:
        return AnalyticBreakdown(
            p_out_approx=1.0, p_a=None, p_b=None, case=case,
            mu=None, delta=None, eta=None, theta_r=None, gamma_bar_1=gb1,
        )
    th = theta_r(cfg)
    lam = cfg.lambda_relay
    mu = 2.0 * th / math.sqrt(lam * cfg.sigma_r_sq * cfg.sigma_r2_sq)
    delta = th / cfg.sigma_r_sq + th / (lam * cfg.sigma_r2_sq)
    eta = None
    if case is CaseLabel.CASE_B:
        eta = cfg.sigma1_sq / (cfg.sigma1_sq - lam * cfg.sigma_r1_sq)
    log_pa = _log_p_component_a(cfg, case)
    log_pb = _log_p_component_b(cfg)
    # 1 - exp(log_pa + log_pb), exact even when the product is 1 - 1e-300
    pout = _check_prob(-math.expm1(log_pa + log_pb), "p_out_approx")
    return AnalyticBreakdown(
        p_out_approx=pout,
        p_a=_check_prob(math.exp(log_pa), "p_component_a"),
        p_b=_check_prob(math.exp(log_pb), "p_component_b"),
        case=case, mu=mu, delta=delta, eta=eta, theta_r=th, gamma_bar_1=gb1,
    )


def p_out_asymptotic(cfg: SystemConfig) -> float:
    """High-SNR outage asymptote delta_r / (P_T / N0)."""
    return delta_r(cfg) / cfg.snr


# --------------------------------------------------------------------------
# Independent oracles (quadrature only; no closed forms, no K1)
# --------------------------------------------------------------------------

def quadrature_oracle_b(cfg: SystemConfig, abs_tol: float = 1e-8) -> float:
    """UE2-side outage probability by 2-D integration of the densities.

    Splits the event region at gr = theta (below it the event is certain)
    and integrates the joint exponential density of (gr, gr2) with nested
    adaptive quadrature. Raises if the quadrature error report exceeds
    the requested tolerance.
    """
    _require_case_ab(cfg, "quadrature_oracle_b")
    th = theta_r(cfg)
    lam = cfg.lambda_relay
    s_r = cfg.sigma_r_sq
    s_r2 = cfg.sigma_r2_sq

    def dens_r(x):
        return math.exp(-x / s_r) / s_r

    def dens_r2(y):
        return math.exp(-y / s_r2) / s_r2

    p_low, e_low = integrate.quad(dens_r, 0.0, th, epsabs=abs_tol / 10, epsrel=1e-10)

    def stripe(x):
        # event boundary in gr2 for gr = x > theta
        ymax = th * x / (lam * (x - th))
        inner, _ = integrate.quad(dens_r2, 0.0, ymax,
                                  epsabs=abs_tol / 10, epsrel=1e-10, limit=200)
        return inner * dens_r(x)

    p_high, e_high = integrate.quad(stripe, th, math.inf,
                                    epsabs=abs_tol / 10, epsrel=1e-10, limit=400)
    err = e_low + e_high
    if not math.isfinite(p_low + p_high) or err > abs_tol:
        raise ArithmeticError(
            f"oracle quadrature did not converge: value={p_low + p_high!r}, "
            f"error estimate={err!r} > {abs_tol!r}"
        )
    return _check_prob(p_low + p_high, "quadrature_oracle_b")


def k1e_scaled_quadrature(x: float) -> float:
    """exp(x) * K1(x) by adaptive quadrature of the integral representation.

    K1(x) = int_0^inf exp(-x cosh t) cosh t dt, scaled by exp(x) so the
    integrand is exp(-2 x sinh^2(t/2)) cosh t, O(1) near t = 0 for any x.
    """
    if not x > 0:
        raise ValueError(f"requires x > 0, got {x}")
    tmax = math.acosh(1.0 + 745.0 / x)  # integrand underflows beyond
    val, err = integrate.quad(
        lambda t: math.exp(-2.0 * x * math.sinh(0.5 * t) ** 2) * math.cosh(t),
        0.0, tmax, epsabs=1e-14, epsrel=1e-13, limit=400,
    )
    if err > 1e-11 * val:
        raise ArithmeticError(f"K1 quadrature error {err!r} too large at x={x!r}")
    return val


def k1_quadrature(x: float) -> float:
    """K1(x) by quadrature; reference oracle for ``bessel_k1``."""
    return math.exp(-x) * k1e_scaled_quadrature(x)


__all__ = [
    "AnalyticBreakdown",
    "OutageCertainError",
    "bessel_k1",
    "bessel_k1e",
    "delta_r",
    "gamma_bar_1",
    "k1_quadrature",
    "k1e_scaled_quadrature",
    "p_component_a",
    "p_component_b",
    "p_out_approx",
    "p_out_asymptotic",
    "quadrature_oracle_b",
    "theta_r",
]
