"""Figure rendering for the CLI report path.

Renders matplotlib figures next to the CSV outputs.  The CSVs remain
the machine-readable contract; figures are a convenience view and can
be suppressed with --no-figures.
"""
from __future__ import annotations

from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_COLORS = plt.rcParams["axes.prop_cycle"].by_key()["color"]


def save_fidelity_figure(rows: Sequence[tuple], path: str) -> None:
    """Seed-averaged fidelity vs time, one curve per (p, dt).

    rows: (n, p, seed, dt, t_eff, fidelity) as written to fidelity.csv.
    """
    groups: dict[tuple[float, float], dict[float, list[float]]] = {}
    for _, p, _, dt, t_eff, fid in rows:
        groups.setdefault((p, dt), {}).setdefault(t_eff, []).append(fid)
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    p_values = sorted({key[0] for key in groups})
    for (p, dt), series in sorted(groups.items()):
        times = np.array(sorted(series))
        means = np.array([np.mean(series[t]) for t in times])
        color = _COLORS[p_values.index(p) % len(_COLORS)]
        style = "-" if dt == min(key[1] for key in groups) else "--"
        ax.plot(times, means, style, color=color,
                label=f"p={p:g}, dt={dt:g}")
    ax.set_xscale("log")
    ax.set_xlabel("time t")
    ax.set_ylabel("fidelity")
    ax.set_ylim(-0.02, 1.02)
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_cutoff_figure(points: Sequence[tuple], fits: Sequence[tuple],
                       path: str) -> None:
    """Averaged cutoff time vs register size with fitted lines.

    points: (n, p, dt, tau_mean); fits: (dt, p, slope, intercept, residual).
    """
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    keys = sorted({(p, dt) for _, p, dt, _ in points})
    for idx, (p, dt) in enumerate(keys):
        ns = np.array([n for n, pp, dd, _ in points if (pp, dd) == (p, dt)])
        taus = np.array([tau for _, pp, dd, tau in points if (pp, dd) == (p, dt)])
        color = _COLORS[idx % len(_COLORS)]
        ax.plot(ns, taus, "o", color=color, label=f"p={p:g}, dt={dt:g}")
        for fdt, fp, slope, intercept, _ in fits:
            if (fp, fdt) == (p, dt):
                grid = np.linspace(ns.min(), ns.max(), 50)
                ax.plot(grid, np.exp(slope * grid + intercept), "-",
                        color=color, alpha=0.6)
    ax.set_yscale("log")
    ax.set_xlabel("n (qubits)")
    ax.set_ylabel(r"cutoff time $\tau_c$")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_localization_figure(exact_p_bar: np.ndarray, circuit_p_bar: np.ndarray,
                             start_vertex: int, path: str,
                             title: Optional[str] = None) -> None:
    """Time-averaged vertex probabilities, exact vs circuit, with the
    uniform baseline 1/N marked."""
    N = exact_p_bar.size
    vertices = np.arange(N)
    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    width = 0.4
    ax.bar(vertices - width / 2, exact_p_bar, width, label="exact")
    ax.bar(vertices + width / 2, circuit_p_bar, width, label="circuit")
    ax.axhline(1.0 / N, color="k", linestyle=":", linewidth=1, label="1/N")
    ax.axvline(start_vertex, color="r", linestyle="--", linewidth=1, alpha=0.5)
    ax.set_xlabel("vertex")
    ax.set_ylabel(r"$\bar{p}_v$")
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_contour_figure(times: np.ndarray, probs: np.ndarray, path: str,
                        title: Optional[str] = None) -> None:
    """Heatmap of vertex occupation probability over time.

    probs has shape (len(times), N).
    """
    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    vertices = np.arange(probs.shape[1])
    mesh = ax.pcolormesh(times, vertices, probs.T, shading="nearest",
                         cmap="viridis")
    ax.set_xlabel("time t")
    ax.set_ylabel("vertex")
    if title:
        ax.set_title(title, fontsize=10)
    fig.colorbar(mesh, ax=ax, label="probability")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_ipr_figure(rows: Sequence[tuple], path: str) -> None:
    """Seed-averaged IPR vs time; rows: (n, p, seed, t_eff, ipr)."""
    groups: dict[float, dict[float, list[float]]] = {}
    for _, p, _, t_eff, value in rows:
        groups.setdefault(p, {}).setdefault(t_eff, []).append(value)
    fig, ax = plt.subplots(figsize=(6.0, 4.2))
    for idx, (p, series) in enumerate(sorted(groups.items())):
        times = np.array(sorted(series))
        means = np.array([np.mean(series[t]) for t in times])
        ax.plot(times, means, color=_COLORS[idx % len(_COLORS)],
                label=f"p={p:g}")
    ax.set_xscale("log")
    ax.set_xlabel("time t")
    ax.set_ylabel("IPR")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
