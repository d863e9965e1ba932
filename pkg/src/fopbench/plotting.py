"""Figure rendering for the experiment CLI.

Writes minimal log-scale line plots as SVG next to the CSV output.  The
files are reproducible: the SVG hash salt is pinned and no timestamp
metadata is embedded, so re-running a seeded experiment rewrites identical
bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

matplotlib.rcParams["svg.hashsalt"] = "fopbench"


def line_figure(
    path: str,
    x,
    series: dict[str, list],
    xlabel: str,
    ylabel: str,
    title: str,
    logx: bool = True,
):
    """One log-y panel with a line per series, saved as SVG."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, ys in series.items():
        ax.plot(x, ys, marker="o", markersize=3, linewidth=1.2, label=label)
    ax.set_yscale("log")
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
