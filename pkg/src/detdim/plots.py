"""Matplotlib figures for verification and corpus-extremes reports."""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_verification(report, path: str):
    """Slack against order, one marker per checked instance; failures in red."""
    pts = defaultdict(list)
    for inst in report.instances:
        if inst.status == "skip" or inst.slack is None:
            continue
        pts[inst.status].append((inst.n, inst.slack))
    fig, ax = plt.subplots(figsize=(6, 4))
    for status, colour in (("pass", "tab:blue"), ("fail", "tab:red")):
        if pts[status]:
            xs, ys = zip(*pts[status])
            ax.scatter(xs, ys, s=12, alpha=0.5, color=colour, label=f"{status} ({len(xs)})")
    ax.axhline(0, color="grey", lw=0.8)
    ax.set_xlabel("order n")
    ax.set_ylabel("slack (bound minus value)")
    ax.set_title(report.statement_id)
    if pts:
        ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_extremes(report, path: str):
    """Histograms of dim - Det and lambda - Det across the corpus."""
    dd = [r["dim"] - r["det"] for r in report.rows if r["dim"] is not None]
    ld = [r["lambda"] - r["det"] for r in report.rows]
    fig, axes = plt.subplots(1, 2, figsize=(8, 3.5), sharey=True)
    for ax, data, name in ((axes[0], dd, "dim - Det"), (axes[1], ld, "lambda - Det")):
        if data:
            lo, hi = min(data), max(data)
            ax.hist(data, bins=range(lo, hi + 2), align="left", rwidth=0.8)
        ax.set_xlabel(name)
    axes[0].set_ylabel("graphs")
    fig.suptitle(f"n = {report.n}, {len(report.rows)} graphs")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
