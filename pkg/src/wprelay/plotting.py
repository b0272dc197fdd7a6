"""Quick-look figures rendered next to sweep CSV outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .simulator import SweepResult

_RATE_LABEL = "average throughput (bits/s/Hz)"


def render_sweep_figure(result: SweepResult, path) -> None:
    """Render the figure matching a sweep table and save it to path."""
    if result.variable == "antenna_count":
        fig = _antenna_figure(result)
    elif result.variable == "placement_grid":
        fig = _placement_figure(result)
    else:
        fig = _snr_figure(result)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _antenna_figure(result: SweepResult):
    data = np.asarray(result.rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(data[:, 0], data[:, 1], "o-", label="optimal beamformer")
    ax.plot(data[:, 0], data[:, 2], "s--", label="benchmark beamformer")
    if data[:, 0].max() / data[:, 0].min() >= 8:
        ax.set_xscale("log", base=2)
    ax.set_xlabel("PB antennas N")
    ax.set_ylabel(_RATE_LABEL)
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig


def _placement_figure(result: SweepResult):
    data = np.asarray(result.rows)
    d1_axis = np.unique(data[:, 0])
    d3_axis = np.unique(data[:, 1])
    grid = data[:, 2].reshape(len(d1_axis), len(d3_axis))

    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    mesh = ax.pcolormesh(d3_axis, d1_axis, grid, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=_RATE_LABEL)
    i, j = np.unravel_index(int(np.argmax(grid)), grid.shape)
    ax.plot(d3_axis[j], d1_axis[i], "r*", markersize=12, label="best placement")
    ax.set_xlabel("d3: S-R distance (m)")
    ax.set_ylabel("d1: PB-S distance (m)")
    ax.legend(loc="upper center")
    return fig


def _snr_figure(result: SweepResult):
    data = np.asarray(result.rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(data[:, 0], data[:, 1], "o-", label="relaying")
    ax.plot(data[:, 0], data[:, 2], "s--", label="direct transmission")
    ax.set_xlabel("transmit SNR P/N0 (dB)")
    ax.set_ylabel(_RATE_LABEL)
    ax.grid(True, alpha=0.3)
    ax.legend()
    return fig
