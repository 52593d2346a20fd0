"""Matplotlib renderings of the analysis reports.

Every function takes already-computed report data and writes a PNG next to
the delimited output; nothing here recomputes operators.
"""

from __future__ import annotations

from typing import Dict, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def _finish(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_gap_curve(k_grid: Sequence[int], gaps: Sequence[float], gamma_exact: float, path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(k_grid, gaps, "o-", label="empirical gap")
    ax.axhline(gamma_exact, color="crimson", ls="--", label="exact gap")
    ax.set_xlabel("truncation order K")
    ax.set_ylabel("spectral gap")
    ax.legend()
    _finish(fig, path)


def plot_energy(trajectories: Dict[str, np.ndarray], path: str) -> None:
    styles = {"exact": "r--", "truncated": "b-.", "compensated": "g-", "gcn": "k-"}
    fig, ax = plt.subplots(figsize=(6, 4))
    for kind, energies in trajectories.items():
        ax.semilogy(np.maximum(np.asarray(energies), 1e-300),
                    styles.get(kind, "-"), label=kind)
    ax.set_xlabel("propagation step t")
    ax.set_ylabel("Dirichlet energy")
    ax.legend()
    _finish(fig, path)


def plot_decay(profiles: Dict[str, np.ndarray], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    for kind, means in profiles.items():
        ax.semilogy(np.arange(len(means)), np.maximum(np.asarray(means), 1e-300),
                    "o-", label=kind)
    ax.set_xlabel("shortest-path distance")
    ax.set_ylabel("mean entry value")
    ax.legend()
    _finish(fig, path)


def plot_rank(k_list: Sequence[int], tau_unc: Sequence[float], tau_comp: Sequence[float], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(k_list, tau_unc, "b-o", label="uncompensated")
    ax.plot(k_list, tau_comp, "g--s", label="compensated")
    ax.set_xlabel("truncation order K")
    ax.set_ylabel("Kendall tau-b vs exact diagonal")
    ax.legend()
    _finish(fig, path)


def plot_verify(k_list: Sequence[int], errs_unc: Sequence[float], errs_comp: Sequence[float],
                bounds: Sequence[float], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(k_list, np.maximum(np.asarray(errs_unc, dtype=float), 1e-300), "b-o",
                label="uncompensated error")
    ax.semilogy(k_list, np.maximum(np.asarray(errs_comp, dtype=float), 1e-300), "g--s",
                label="compensated error")
    ax.semilogy(k_list, bounds, "k:", label="theoretical bound")
    ax.set_xlabel("truncation order K")
    ax.set_ylabel("infinity-norm error")
    ax.legend()
    _finish(fig, path)


def plot_bench(rows: Sequence[dict], path: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    edges = [r["E"] for r in rows]
    stream = [r["t_stream"] for r in rows]
    ax.loglog(edges, stream, "g-o", label="streaming propagate")
    exact_pts = [(r["E"], r["t_exact"]) for r in rows if r.get("t_exact") is not None]
    if exact_pts:
        ax.loglog([p[0] for p in exact_pts], [p[1] for p in exact_pts],
                  "r--s", label="dense inversion")
    ax.set_xlabel("edge count")
    ax.set_ylabel("wall time (s)")
    ax.legend()
    _finish(fig, path)
