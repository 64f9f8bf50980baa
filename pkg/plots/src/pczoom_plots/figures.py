"""Render the two experiment figures from harness CSVs.

Rendering is deterministic so images diff cleanly: fixed figure geometry,
a pinned SVG hash salt, text kept as text, and no timestamp metadata.
Inputs are read-only.
"""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import read_aggregate, read_fairness

_RC = {
    "figure.figsize": (7.0, 4.5),
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "svg.hashsalt": "pczoom-plots",
    "svg.fonttype": "none",
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.axisbelow": True,
}


def _save(fig, out_path: str | Path, force_png: bool = False) -> Path:
    out = Path(out_path)
    fmt = "png" if (force_png or out.suffix.lower() == ".png") else "svg"
    out.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "svg":
        fig.savefig(out, format=fmt, metadata={"Date": None})
    else:
        fig.savefig(out, format=fmt)
    plt.close(fig)
    return out


def plot_regret(aggregate_csv: str | Path, out_path: str | Path,
                title: str | None = None, force_png: bool = False) -> Path:
    """One mean-regret line per policy with a shaded standard-error band.

    Policies whose standard error is identically zero (single-run files)
    are drawn without a band.
    """
    ts, series = read_aggregate(aggregate_csv)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for policy, s in series.items():
            (line,) = ax.plot(ts, s["mean"], label=policy, linewidth=1.6)
            line.set_gid(f"regret-line-{policy}")
            if np.any(s["se"] > 0):
                band = ax.fill_between(ts, s["mean"] - s["se"], s["mean"] + s["se"],
                                       color=line.get_color(), alpha=0.25,
                                       linewidth=0)
                band.set_gid(f"regret-band-{policy}")
        ax.set_xlabel("rounds")
        ax.set_ylabel("cumulative Pareto regret")
        ax.set_title(title or "Pareto regret vs. number of rounds")
        ax.legend(loc="upper left", frameon=False)
        return _save(fig, out_path, force_png)


def plot_fairness(fairness_csv: str | Path, out_path: str | Path,
                  title: str | None = None, force_png: bool = False) -> Path:
    """Grouped bar chart: six Pareto-band bins per policy."""
    rows = read_fairness(fairness_csv)
    for policy, ratios, _ in rows:
        drift = abs(float(ratios.sum()) - 1.0)
        if drift > 1e-6:
            print(f"warning: {policy} bin ratios sum to {ratios.sum():.6f}, "
                  "expected 1", file=sys.stderr)
    bins = np.arange(1, 7)
    width = 0.8 / len(rows)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for k, (policy, ratios, _) in enumerate(rows):
            offset = (k - (len(rows) - 1) / 2) * width
            bars = ax.bar(bins + offset, ratios, width, label=policy)
            for i, bar in enumerate(bars):
                bar.set_gid(f"fairness-bar-{policy}-{i + 1}")
        ax.set_xlabel("Pareto front bin")
        ax.set_ylabel("selection ratio")
        ax.set_xticks(bins)
        ax.set_title(title or "Selection ratio of the Pareto front bins")
        ax.legend(loc="upper right", frameon=False)
        return _save(fig, out_path, force_png)
