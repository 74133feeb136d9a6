"""Figures written next to the CSV/JSON reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .reduce import GenusTable  # noqa: E402

SERIES = (("r", "|R_g| ribbon graphs"), ("c", "|C_g| connected"),
          ("l", "|L_g| least genus g"), ("m", "|M_g| all"))


def _figure(width=6.0, height=None):
    golden = (math.sqrt(5) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, height or width * golden))
    return fig, ax


def plot_table(table: GenusTable, path: Path | str) -> Path:
    """Grouped log-scale bars of the four counts per genus."""
    path = Path(path)
    fig, ax = _figure()
    genera = list(range(len(table.r)))
    width = 0.2
    for i, (attr, label) in enumerate(SERIES):
        values = getattr(table, attr)
        xs = [g + (i - 1.5) * width for g in genera]
        ax.bar(xs, values, width=width, label=label)
    ax.set_yscale("log")
    ax.set_xticks(genera)
    ax.set_xlabel("genus g")
    ax.set_ylabel("count")
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_estimates(keys: Sequence[str], estimates: Sequence[int], path: Path | str,
                   actual: Sequence[int] | None = None) -> Path:
    """Per-triple capacity estimates, optionally against stored counts."""
    path = Path(path)
    fig, ax = _figure(width=max(6.0, 0.12 * len(keys)))
    xs = range(len(keys))
    ax.plot(xs, [max(e, 1) for e in estimates], "o", ms=3, label="estimate")
    if actual is not None:
        ax.plot(xs, [max(a, 1) for a in actual], "x", ms=3, label="stored")
    ax.set_yscale("log")
    ax.set_xlabel("type triple (E ascending)")
    ax.set_ylabel("hypermaps")
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    return path
