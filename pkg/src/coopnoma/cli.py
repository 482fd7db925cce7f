"""Command-line front end.

Subcommands:
  simulate     Monte-Carlo estimates only
  analytic     closed forms and asymptote only
  sweep        combined curve (simulation + closed forms)
  compare-oma  NOMA sweep against the optimized three-slot OMA baseline
  validate     self-check property suite (nonzero exit on failure)

Exit codes: 0 success, 1 property-suite failure, 2 bad configuration.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .analytic import OutageCertainError, p_out_approx, p_out_asymptotic
from .config import ConfigError, db_to_linear
from .montecarlo import Variant, estimate_outage, sweep_snr
from .oma import OmaConfig, optimize_lambda1
from .report import CsvRow, rows_from_sweep, save_compare_figure, save_sweep_figure, write_csv
from .scenarios import Scenario, resolve_scenario
from .validate import format_report, run_all


def _add_common(p: argparse.ArgumentParser, mc: bool = True) -> None:
    p.add_argument("--scenario", required=True,
                   help="built-in scenario name (case-a, case-b1, case-b2, case-c) "
                        "or path to a scenario file")
    p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    p.add_argument("--snr-from", type=float, default=None, help="grid start (dB)")
    p.add_argument("--snr-to", type=float, default=None, help="grid end (dB), inclusive")
    p.add_argument("--snr-step", type=float, default=None, help="grid step (dB)")
    if mc:
        p.add_argument("--trials", type=int, default=None, help="Monte-Carlo trials per point")
        p.add_argument("--seed", type=int, default=None, help="master seed")
        p.add_argument("--workers", type=int, default=1, help="parallel chunk workers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopnoma",
        description="Outage curves for the two-user cooperative NOMA downlink "
                    "with an amplify-and-forward relay.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("simulate", help="Monte-Carlo estimates only"))
    _add_common(sub.add_parser("analytic", help="closed forms only"), mc=False)
    sweep = sub.add_parser("sweep", help="combined simulation + closed-form curve")
    _add_common(sweep)
    sweep.add_argument("--figure", default=None,
                       help="figure output path (default: derived from --out)")
    sweep.add_argument("--no-figure", action="store_true", help="skip figure rendering")
    cmp_p = sub.add_parser("compare-oma", help="NOMA vs optimized OMA baseline")
    _add_common(cmp_p)
    cmp_p.add_argument("--oma-grid-step", type=float, default=0.01,
                       help="power-split search resolution (default 0.01)")
    cmp_p.add_argument("--figure", default=None,
                       help="figure output path (default: derived from --out)")
    cmp_p.add_argument("--no-figure", action="store_true", help="skip figure rendering")
    sub.add_parser("validate", help="run the self-check property suite")
    return parser


def _scenario_from_args(args) -> Scenario:
    scen = resolve_scenario(args.scenario)
    grid = list(scen.snr_grid_db)
    if args.snr_from is not None or args.snr_to is not None or args.snr_step is not None:
        if args.snr_from is None or args.snr_to is None:
            raise ConfigError("--snr-from and --snr-to must be given together")
        step = args.snr_step if args.snr_step is not None else 5.0
        if step <= 0:
            raise ConfigError("--snr-step must be > 0")
        grid = []
        x = args.snr_from
        while x <= args.snr_to + 1e-9:
            grid.append(round(x, 9))
            x += step
    n_trials = scen.n_trials if getattr(args, "trials", None) is None else args.trials
    seed = scen.seed if getattr(args, "seed", None) is None else args.seed
    return Scenario(name=scen.name, cfg=scen.cfg, snr_grid_db=tuple(grid),
                    n_trials=n_trials, seed=seed)


def _figure_path(args) -> str | None:
    if getattr(args, "no_figure", False):
        return None
    if getattr(args, "figure", None):
        return args.figure
    if args.out:
        base = args.out[:-4] if args.out.endswith(".csv") else args.out
        return base + ".png"
    return None


def _cmd_simulate(args) -> int:
    scen = _scenario_from_args(args)
    rows = []
    for snr_db in scen.snr_grid_db:
        cfg = scen.cfg.with_total_power(scen.cfg.noise_power * db_to_linear(snr_db))
        mc = estimate_outage(cfg, scen.n_trials, scen.seed, Variant.EXACT, args.workers)
        lb = estimate_outage(cfg, scen.n_trials, scen.seed, Variant.LOWER_BOUND, args.workers)
        rows.append(CsvRow(
            scenario=scen.name, snr_db=snr_db, n_trials=mc.n_trials,
            pout_mc=mc.p_overall, pout_mc_ci95=mc.ci_halfwidth_95,
            pout_ue1_mc=mc.p_ue1, pout_ue2_mc=mc.p_ue2, pout_lb_mc=lb.p_overall))
    write_csv(rows, args.out)
    return 0


def _cmd_analytic(args) -> int:
    scen = _scenario_from_args(args)
    rows = []
    for snr_db in scen.snr_grid_db:
        cfg = scen.cfg.with_total_power(scen.cfg.noise_power * db_to_linear(snr_db))
        b = p_out_approx(cfg)
        try:
            asym = p_out_asymptotic(cfg)
        except OutageCertainError:
            asym = None
        rows.append(CsvRow(
            scenario=scen.name, snr_db=snr_db, pout_approx=b.p_out_approx,
            p_a=b.p_a, p_b=b.p_b, pout_asymp=asym, case_label=b.case.value))
    write_csv(rows, args.out)
    return 0


def _cmd_sweep(args) -> int:
    scen = _scenario_from_args(args)
    points = sweep_snr(scen.cfg, scen.snr_grid_db, scen.n_trials, scen.seed, args.workers)
    write_csv(rows_from_sweep(scen.name, points), args.out)
    fig = _figure_path(args)
    if fig:
        save_sweep_figure({scen.name: points}, fig)
        print(f"figure written to {fig}", file=sys.stderr)
    return 0


def _cmd_compare_oma(args) -> int:
    scen = _scenario_from_args(args)
    points = sweep_snr(scen.cfg, scen.snr_grid_db, scen.n_trials, scen.seed, args.workers)
    rows = rows_from_sweep(scen.name, points)
    oma_curve = []
    for snr_db in scen.snr_grid_db:
        cfg = scen.cfg.with_total_power(scen.cfg.noise_power * db_to_linear(snr_db))
        base = OmaConfig(base=cfg, lambda1_oma=0.5)
        best_lam1, est = optimize_lambda1(base, args.oma_grid_step, scen.n_trials, scen.seed)
        print(f"{scen.name} OMA {snr_db:g} dB: best lambda1 = {best_lam1:.2f}, "
              f"outage = {est.p_overall:.6g}", file=sys.stderr)
        oma_curve.append((snr_db, est.p_overall))
        rows.append(CsvRow(
            scenario=f"{scen.name}:oma", snr_db=snr_db, n_trials=est.n_trials,
            pout_mc=est.p_overall, pout_mc_ci95=est.ci_halfwidth_95,
            pout_ue1_mc=est.p_ue1, pout_ue2_mc=est.p_ue2))
    write_csv(rows, args.out)
    fig = _figure_path(args)
    if fig:
        save_compare_figure(scen.name, points, oma_curve, fig)
        print(f"figure written to {fig}", file=sys.stderr)
    return 0


def _cmd_validate(_args) -> int:
    results = run_all()
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "simulate": _cmd_simulate,
        "analytic": _cmd_analytic,
        "sweep": _cmd_sweep,
        "compare-oma": _cmd_compare_oma,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
