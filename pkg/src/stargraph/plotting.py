"""Figures for the report and edst commands (rendered off-screen)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_META = {"Software": None}


def _save(fig, path: Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)
    return path


def plot_network_table(rows: list[dict], path: Path) -> Path:
    """Grouped bars: tau bound, sigma bound and trees constructed per preset."""
    rows = [r for r in rows if not r.get("error")]
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(rows) + 2), 4))
    xs = range(len(rows))
    width = 0.27
    for shift, key, colour in ((-width, "tau", "#9bb7d4"), (0, "sigma", "#d4c19b"), (width, "constructed", "#3a7d44")):
        ax.bar([x + shift for x in xs], [int(r[key]) for r in rows], width, label=key, color=colour)
    ax.set_xticks(list(xs))
    ax.set_xticklabels([r["preset"] for r in rows], rotation=40, ha="right", fontsize=8)
    ax.set_ylabel("spanning trees")
    ax.legend(frameon=False)
    ax.set_title("Constructed trees against upper bounds")
    return _save(fig, path)


def plot_factor_table(rows: list[dict], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(rows) + 2), 4))
    xs = range(len(rows))
    ax.bar([x - 0.2 for x in xs], [r["t"] for r in rows], 0.4, label="t (packed)", color="#3a7d44")
    ax.bar([x + 0.2 for x in xs], [r["r"] for r in rows], 0.4, label="r (left over)", color="#c9a227")
    ax.set_xticks(list(xs))
    ax.set_xticklabels([f"{r['factor']}({r['parameter']})" for r in rows], rotation=40, ha="right", fontsize=8)
    ax.legend(frameon=False)
    ax.set_title("Factor packings")
    return _save(fig, path)


def plot_depths(ts, path: Path) -> Path:
    """Measured depth of each tree next to its guaranteed bound."""
    labels = [f"{bt.kind}[{bt.index}]" for bt in ts.trees]
    fig, ax = plt.subplots(figsize=(max(5, 0.8 * len(labels) + 2), 4))
    xs = range(len(labels))
    ax.bar([x - 0.2 for x in xs], [bt.depth for bt in ts.trees], 0.4, label="measured", color="#3a7d44")
    ax.bar([x + 0.2 for x in xs], [bt.bound for bt in ts.trees], 0.4, label="bound", color="#bbbbbb")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=40, ha="right", fontsize=8)
    ax.set_ylabel("depth")
    ax.legend(frameon=False)
    ax.set_title(f"{ts.product.label}: {ts.mode}")
    return _save(fig, path)
