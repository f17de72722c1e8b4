"""Figure rendering for the report paths of the CLI.

Circular-layout drawings of single graphs (optionally with a highlighted
vertex set or a color-class palette) and a verdict summary chart for
corpus runs.  Everything writes straight to files; no interactive backend.
"""
from __future__ import annotations

import math
from typing import Mapping, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graph import Graph

_PALETTE = ("#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377")


def _layout(g: Graph) -> list[tuple[float, float]]:
    if g.n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * v / g.n - math.pi / 2),
         math.sin(2 * math.pi * v / g.n - math.pi / 2))
        for v in range(g.n)
    ]


def draw_graph(
    g: Graph,
    out_path: str,
    title: str = "",
    colors: Optional[Sequence[int]] = None,
    highlight: Sequence[int] = (),
) -> None:
    """Write a circular-layout drawing of g to out_path.

    `colors` maps each vertex to a palette index (a coloring); `highlight`
    marks a vertex subset (a hole or an embedding image) with thick rings.
    """
    pos = _layout(g)
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.edges:
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="#888888", linewidth=1.2, zorder=1)
    marked = set(highlight)
    for v in range(g.n):
        if colors is not None:
            face = _PALETTE[colors[v] % len(_PALETTE)]
        else:
            face = "#dddddd"
        edge = "#cc2222" if v in marked else "#333333"
        width = 2.5 if v in marked else 1.0
        ax.scatter(*pos[v], s=420, facecolors=face, edgecolors=edge,
                   linewidths=width, zorder=2)
        ax.annotate(str(v), pos[v], ha="center", va="center", zorder=3,
                    fontsize=9)
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def draw_corpus_summary(
    counts: Mapping[str, int],
    out_path: str,
    title: str = "corpus verdicts",
) -> None:
    """Bar chart of verdict (or consistency-status) counts for a corpus run."""
    labels = list(counts)
    values = [counts[k] for k in labels]
    fig, ax = plt.subplots(figsize=(6, 4))
    bars = ax.bar(range(len(labels)), values,
                  color=[_PALETTE[i % len(_PALETTE)] for i in range(len(labels))])
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right")
    ax.set_ylabel("graphs")
    ax.set_title(title)
    for bar, value in zip(bars, values):
        ax.annotate(str(value), (bar.get_x() + bar.get_width() / 2, value),
                    ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
