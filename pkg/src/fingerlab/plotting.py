"""Figure rendering for report directories (Agg backend, deterministic)."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = ["save_table_figure", "save_gram_figure", "save_family_figure"]

_META = {"Software": "fingerlab"}


def _cell_numeric(value: str) -> float:
    if "--" in value:
        lo, hi = (t.strip() for t in value.split("--"))
        return (_cell_numeric(lo) + _cell_numeric(hi)) / 2
    if value.startswith(">="):
        return float(Fraction(value[2:]))
    try:
        return float(Fraction(value))
    except (ValueError, ZeroDivisionError):
        return float("nan")


def save_table_figure(table, path: Path) -> Path:
    rows, cols = table.row_labels, table.col_labels
    grid = np.full((len(rows), len(cols)), np.nan)
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            grid[i, j] = _cell_numeric(table.cells[(r, c)].value)
    fig, ax = plt.subplots(figsize=(1.1 + 0.65 * len(cols), 1.2 + 0.3 * len(rows)))
    im = ax.imshow(grid, aspect="auto", cmap="viridis", vmin=0.0,
                   vmax=max(1.0, np.nanmax(grid)))
    ax.set_xticks(range(len(cols)), cols)
    ax.set_yticks(range(len(rows)), rows)
    ax.set_xlabel("m")
    ax.set_ylabel("q" if table.table_id == "I" else "n")
    ax.set_title(f"table {table.table_id}")
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def save_gram_figure(gram_abs: np.ndarray, title: str, path: Path,
                     bound: float | None = None) -> Path:
    fig, ax = plt.subplots(figsize=(5.4, 4.6))
    im = ax.imshow(gram_abs, cmap="magma", vmin=0.0, vmax=1.0)
    ax.set_title(title)
    ax.set_xlabel("state index")
    ax.set_ylabel("state index")
    fig.colorbar(im, ax=ax, label="|inner product|")
    if bound is not None:
        ax.text(0.02, 0.02, f"simplex bound {bound:.6f}",
                transform=ax.transAxes, color="white", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def save_family_figure(family, path: Path, title: str = "family") -> Path:
    n, m = len(family.sets), family.m
    grid = np.zeros((n, m))
    for i, s in enumerate(family.sets):
        for b in range(m):
            grid[i, b] = (s >> b) & 1
    fig, ax = plt.subplots(figsize=(1.0 + 0.4 * m, 1.0 + 0.25 * n))
    ax.imshow(grid, cmap="Greys", aspect="auto", vmin=0, vmax=1)
    ax.set_xticks(range(m), [str(i + 1) for i in range(m)])
    ax.set_yticks(range(n), [str(i + 1) for i in range(n)])
    ax.set_xlabel("element")
    ax.set_ylabel("member")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path
