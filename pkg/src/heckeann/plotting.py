"""PNG figures for the report commands (matplotlib, headless backend)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["plot_rank_comparison", "plot_coefficient_heatmap", "plot_integer_matrix"]


def _save(fig, path: Path) -> str:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return str(path)


def plot_rank_comparison(labels: Sequence[str], closed: Sequence[int], kernel: Sequence[int],
                         path: Path, title: str = "") -> str:
    """Grouped bars: closed-form rank next to kernel rank for each ring."""
    fig, ax = plt.subplots(figsize=(max(4, 1.2 * len(labels) + 2), 3.5))
    xs = range(len(labels))
    ax.bar([x - 0.2 for x in xs], closed, width=0.4, label="closed form")
    ax.bar([x + 0.2 for x in xs], kernel, width=0.4, label="kernel")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=20, ha="right")
    ax.set_ylabel("rank")
    ax.set_title(title)
    ax.legend()
    return _save(fig, Path(path))


def plot_coefficient_heatmap(rows: Sequence[Sequence[int]], row_labels: Sequence[str],
                             col_labels: Sequence[str], path: Path, title: str = "") -> str:
    """Integer coefficient matrix, e.g. elements at v = 1 against permutations."""
    fig, ax = plt.subplots(figsize=(max(5, 0.35 * len(col_labels) + 2), max(3, 0.4 * len(row_labels) + 1)))
    bound = max([abs(x) for r in rows for x in r] + [1])
    im = ax.imshow(rows, cmap="coolwarm", vmin=-bound, vmax=bound, aspect="auto")
    ax.set_yticks(range(len(row_labels)))
    ax.set_yticklabels(row_labels)
    ax.set_xticks(range(len(col_labels)))
    ax.set_xticklabels(col_labels, rotation=90, fontsize=7)
    ax.set_title(title)
    fig.colorbar(im, ax=ax)
    return _save(fig, Path(path))


def plot_integer_matrix(rows: Sequence[Sequence[int]], row_labels: Sequence[str],
                        col_labels: Sequence[str], path: Path, title: str = "") -> str:
    """Small matrix drawn as a grid with its entries written in."""
    fig, ax = plt.subplots(figsize=(0.8 * len(col_labels) + 2, 0.6 * len(row_labels) + 1.5))
    ax.imshow(rows, cmap="Greys", vmin=0, vmax=max([x for r in rows for x in r] + [1]) * 2)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            ax.text(j, i, str(x), ha="center", va="center")
    ax.set_yticks(range(len(row_labels)))
    ax.set_yticklabels(row_labels)
    ax.set_xticks(range(len(col_labels)))
    ax.set_xticklabels(col_labels, rotation=45, ha="right")
    ax.set_title(title)
    return _save(fig, Path(path))
