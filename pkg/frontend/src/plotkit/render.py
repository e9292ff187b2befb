"""Heatmap and bar-chart rendering with a structured self-report.

Every renderer returns a report describing exactly what was drawn (labels,
order, value range, output size), so pipelines can assert on the figure
contents without pixel comparisons.
"""

from __future__ import annotations

import struct

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .io import read_bars, read_matrix

FIG_DPI = 100


def png_dimensions(path: str) -> tuple[int, int]:
    """(width, height) straight from the PNG header."""
    with open(path, "rb") as fh:
        head = fh.read(24)
    if len(head) < 24 or head[:8] != b"\x89PNG\r\n\x1a\n":
        raise ValueError(f"{path} is not a PNG file")
    width, height = struct.unpack(">II", head[16:24])
    return width, height


def render_heatmap(csv_path: str, out_path: str, title: str | None = None) -> dict:
    """Defender x attacker heatmap; cell color is the mean captured fraction."""
    data = read_matrix(csv_path)
    grid = [
        [data.values[(d, a)] for a in data.attackers] for d in data.defenders
    ]
    fig, ax = plt.subplots(
        figsize=(2.0 + 0.8 * len(data.attackers), 1.5 + 0.45 * len(data.defenders))
    )
    image = ax.imshow(grid, cmap="viridis", vmin=0.0, vmax=1.0, aspect="auto")
    ax.set_xticks(range(len(data.attackers)), labels=data.attackers,
                  rotation=45, ha="right")
    ax.set_yticks(range(len(data.defenders)), labels=data.defenders)
    ax.set_xlabel("attacker strategy")
    ax.set_ylabel("defender strategy")
    if title:
        ax.set_title(title)
    bar = fig.colorbar(image, ax=ax)
    bar.set_label("mean fraction of nodes captured")
    fig.tight_layout()
    fig.savefig(out_path, dpi=FIG_DPI)
    plt.close(fig)
    width, height = png_dimensions(out_path)
    return {
        "kind": "heatmap",
        "out": out_path,
        "rows": len(data.defenders),
        "cols": len(data.attackers),
        "row_labels": list(data.defenders),
        "col_labels": list(data.attackers),
        "vmin": 0.0,
        "vmax": 1.0,
        "title": title,
        "width_px": width,
        "height_px": height,
    }


def render_bars(csv_path: str, out_path: str, title: str | None = None) -> dict:
    """Per-defense bars with 95% CI whiskers, most effective defense first."""
    rows = read_bars(csv_path)
    ordered = sorted(rows, key=lambda r: (r.mean, r.defender))
    labels = [r.defender for r in ordered]
    means = [r.mean for r in ordered]
    cis = [r.ci95 for r in ordered]
    fig, ax = plt.subplots(figsize=(2.0 + 0.6 * len(ordered), 4.0))
    ax.bar(range(len(ordered)), means, yerr=cis, capsize=3, color="#3b6ea5")
    ax.set_xticks(range(len(ordered)), labels=labels, rotation=45, ha="right")
    ax.set_ylabel("mean fraction of nodes captured")
    ax.set_xlabel("defender strategy")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=FIG_DPI)
    plt.close(fig)
    width, height = png_dimensions(out_path)
    return {
        "kind": "bars",
        "out": out_path,
        "labels_in_order": labels,
        "means_in_order": means,
        "ci95_in_order": cis,
        "title": title,
        "width_px": width,
        "height_px": height,
    }
