"""Small figures for the CLI reports (files only, Agg backend)."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .core import format_clause  # noqa: E402


def implicate_levels_figure(levels, path, title=None):
    """Bar chart: least level k with F ⊨_k C, one bar per prime implicate."""
    labels = [format_clause(c) for c in levels]
    values = list(levels.values())
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(values) + 2), 3))
    ax.bar(range(len(values)), values, color="tab:blue")
    ax.set_xticks(range(len(values)))
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=7)
    ax.set_ylabel("level")
    ax.set_yticks(range(max(values, default=0) + 1))
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def reduction_profile_figure(sizes, path, title=None):
    """Clause count and literal count of r_k(F) for k = 0, 1, ..."""
    ks = range(len(sizes))
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.plot(ks, [c for c, _ in sizes], marker="o", label="clauses")
    ax.plot(ks, [l for _, l in sizes], marker="s", label="literal occurrences")
    ax.set_xlabel("k")
    ax.set_xticks(list(ks))
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
