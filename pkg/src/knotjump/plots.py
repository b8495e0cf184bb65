"""Figure rendering for signature step functions and root spectra.

Everything here draws with the Agg backend and writes straight to files, so
the CLI can emit figures next to its delimited reports without a display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import math

import matplotlib.pyplot as plt


def save_signature_plot(samples, root_turns, title: str, path: str) -> None:
    """Step plot of signature samples (s, sigma) with roots marked."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    _draw_signature(ax, samples, root_turns, title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_signature_grid(panels, path: str) -> None:
    """Grid of signature step plots; panels are (title, samples, root_turns)."""
    count = max(1, len(panels))
    cols = min(4, count)
    rows = math.ceil(count / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3.6 * cols, 2.6 * rows), squeeze=False)
    flat = [ax for row in axes for ax in row]
    for ax, (title, samples, root_turns) in zip(flat, panels):
        _draw_signature(ax, samples, root_turns, title)
    for ax in flat[len(panels):]:
        ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_torus_spectrum(rows, path: str) -> None:
    """Root spectrum strip chart; rows are (label, turn, jump) per root."""
    labels = []
    for label, _, _ in rows:
        if label not in labels:
            labels.append(label)
    index = {label: i for i, label in enumerate(labels)}
    fig_h = max(2.0, 0.28 * len(labels) + 1.2)
    fig, ax = plt.subplots(figsize=(6.8, fig_h))
    for label, turn, jump in rows:
        color = "#b02428" if jump > 0 else "#1f4e9c"
        ax.plot([float(turn)], [index[label]], marker="|", markersize=9,
                markeredgewidth=2, color=color, linestyle="none")
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.set_xlim(0, 0.5)
    ax.set_xlabel("turn s")
    ax.set_title("Alexander circle roots (red: jump +2, blue: jump -2)")
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _draw_signature(ax, samples, root_turns, title: str) -> None:
    xs = [float(s) for s, _ in samples]
    ys = [sig for _, sig in samples]
    ax.plot(xs, ys, drawstyle="steps-post", color="#1f4e9c", linewidth=1.6)
    for turn in root_turns:
        ax.axvline(float(turn), color="#999999", linewidth=0.8, linestyle=":")
    ax.set_xlim(0, 0.5)
    ax.set_xlabel("turn s")
    ax.set_ylabel("signature")
    ax.set_title(title, fontsize=9)
