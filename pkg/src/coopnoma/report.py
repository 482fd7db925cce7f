"""CSV curve emission and the companion outage-vs-SNR figures.

The CSV column set is fixed (consumers parse it by header); fields that a
subcommand does not compute stay empty. Formatting is deterministic, so
identical runs produce byte-identical files. Figures are rendered
head-less straight to image files next to the CSV.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .montecarlo import SweepPoint

CSV_HEADER = ("scenario,snr_db,n_trials,pout_mc,pout_mc_ci95,pout_ue1_mc,"
              "pout_ue2_mc,pout_lb_mc,pout_approx,p_a,p_b,pout_asymp,case_label")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return f"{value:.10g}"


@dataclass(frozen=True)
class CsvRow:
    scenario: str
    snr_db: float
    n_trials: int | None = None
    pout_mc: float | None = None
    pout_mc_ci95: float | None = None
    pout_ue1_mc: float | None = None
    pout_ue2_mc: float | None = None
    pout_lb_mc: float | None = None
    pout_approx: float | None = None
    p_a: float | None = None
    p_b: float | None = None
    pout_asymp: float | None = None
    case_label: str | None = None

    def render(self) -> str:
        return ",".join([
            self.scenario,
            _fmt(self.snr_db),
            _fmt(self.n_trials),
            _fmt(self.pout_mc),
            _fmt(self.pout_mc_ci95),
            _fmt(self.pout_ue1_mc),
            _fmt(self.pout_ue2_mc),
            _fmt(self.pout_lb_mc),
            _fmt(self.pout_approx),
            _fmt(self.p_a),
            _fmt(self.p_b),
            _fmt(self.pout_asymp),
            self.case_label or "",
        ])


def rows_from_sweep(scenario_name: str, points: list[SweepPoint],
                    include_mc: bool = True, include_analytic: bool = True) -> list[CsvRow]:
    rows = []
    for pt in points:
        kw = {}
        if include_mc:
            kw.update(
                n_trials=pt.mc.n_trials,
                pout_mc=pt.mc.p_overall,
                pout_mc_ci95=pt.mc.ci_halfwidth_95,
                pout_ue1_mc=pt.mc.p_ue1,
                pout_ue2_mc=pt.mc.p_ue2,
                pout_lb_mc=pt.mc_lower_bound.p_overall,
            )
        if include_analytic:
            kw.update(
                pout_approx=pt.analytic.p_out_approx,
                p_a=pt.analytic.p_a,
                p_b=pt.analytic.p_b,
                pout_asymp=pt.asymptote,
                case_label=pt.analytic.case.value,
            )
        rows.append(CsvRow(scenario=scenario_name, snr_db=pt.snr_db, **kw))
    return rows


def render_csv(rows: list[CsvRow]) -> str:
    return "\n".join([CSV_HEADER] + [r.render() for r in rows]) + "\n"


def write_csv(rows: list[CsvRow], out_path: str | None) -> None:
    text = render_csv(rows)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# --------------------------------------------------------------------------
# Figures
# --------------------------------------------------------------------------

def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _plot_curves(ax, label: str, points: list[SweepPoint], color: str) -> None:
    snr = [pt.snr_db for pt in points]
    ax.semilogy(snr, [pt.mc.p_overall for pt in points], "o", color=color,
                label=f"{label} simulation")
    ax.semilogy(snr, [pt.analytic.p_out_approx for pt in points], "-", color=color,
                label=f"{label} approximation")
    asym = [(db, pt.asymptote) for db, pt in zip(snr, points) if pt.asymptote is not None]
    if asym and any(v < 10 for _, v in asym):
        ax.semilogy([a[0] for a in asym], [a[1] for a in asym], "--", color=color,
                    linewidth=0.9, label=f"{label} asymptote")


def save_sweep_figure(points_by_name: dict[str, list[SweepPoint]], path: str) -> None:
    """Outage-probability-versus-SNR figure for one or more scenarios."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    colors = ["C0", "C1", "C2", "C3", "C4", "C5"]
    for i, (name, points) in enumerate(points_by_name.items()):
        _plot_curves(ax, name, points, colors[i % len(colors)])
    ax.set_xlabel("transmit SNR $P_T/N_0$ (dB)")
    ax.set_ylabel("outage probability")
    ax.set_ylim(top=1.5)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_compare_figure(name: str, noma_points: list[SweepPoint],
                        oma_curve: list[tuple[float, float]], path: str) -> None:
    """NOMA curves with the optimized OMA baseline overlaid."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    _plot_curves(ax, f"{name} NOMA", noma_points, "C0")
    ax.semilogy([db for db, _ in oma_curve], [p for _, p in oma_curve], "s--",
                color="C3", label=f"{name} OMA (optimized split)")
    ax.set_xlabel("transmit SNR $P_T/N_0$ (dB)")
    ax.set_ylabel("outage probability")
    ax.set_ylim(top=1.5)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
