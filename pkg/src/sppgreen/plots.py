"""Figure rendering for the CLI report path.

Each renderer takes the (columns, rows) table a subcommand produced and
writes a PNG next to the delimited output.  The CSV remains the data
contract; figures are a convenience view of the same rows.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

__all__ = ["render"]


def _column(columns, rows, name, as_float=True):
    i = columns.index(name)
    vals = [r[i] for r in rows]
    if as_float:
        return np.array([float(v) for v in vals])
    return vals


def _render_dispersion(columns, rows, path):
    lam = _column(columns, rows, "lambda_nm")
    kre = _column(columns, rows, "kspp_re")
    kim = _column(columns, rows, "kspp_im")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.4))
    ax1.plot(lam, kre, "o-")
    ax1.set_xlabel("wavelength (nm)")
    ax1.set_ylabel("Re k_spp (rad/m)")
    ax2.plot(lam, kim, "o-", color="tab:red")
    ax2.set_xlabel("wavelength (nm)")
    ax2.set_ylabel("Im k_spp (rad/m)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_field_map(columns, rows, path):
    x = _column(columns, rows, "x_nm")
    y = _column(columns, rows, "y_nm")
    e2 = _column(columns, rows, "E2")
    xs = np.unique(x)
    ys = np.unique(y)
    grid = np.full((ys.size, xs.size), np.nan)
    ix = np.searchsorted(xs, x)
    iy = np.searchsorted(ys, y)
    grid[iy, ix] = e2
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    pos = grid[np.isfinite(grid) & (grid > 0)]
    if pos.size:
        floor = pos.max() * 1e-8
        shown = np.log10(np.maximum(grid, floor))
        label = "log10 |E|^2"
    else:
        shown = grid
        label = "|E|^2"
    pm = ax.pcolormesh(xs, ys, shown, shading="nearest")
    fig.colorbar(pm, ax=ax, label=label)
    ax.set_xlabel("x (nm)")
    ax.set_ylabel("y (nm)")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_sweep(columns, rows, path):
    var = columns[0]
    v = _column(columns, rows, var)
    rz = _column(columns, rows, "ratio_perp")
    rx = _column(columns, rows, "ratio_par")
    fig, ax = plt.subplots(figsize=(5.2, 3.6))
    ax.plot(v, rz, "o-", label="perpendicular (z)")
    ax.plot(v, rx, "s-", label="parallel (x)")
    ax.set_xlabel(var)
    ax.set_ylabel("E^2 / E0^2")
    if np.all(rz > 0) and np.all(rx > 0):
        ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_g2(columns, rows, path):
    tau = _column(columns, rows, "tau_gamma")
    g2 = _column(columns, rows, "g2")
    labels = [
        f"{o} {l} nm z0={z} nm"
        for o, l, z in zip(
            _column(columns, rows, "orientation", as_float=False),
            _column(columns, rows, "lambda_nm"),
            _column(columns, rows, "z0_nm"),
        )
    ]
    fig, ax = plt.subplots(figsize=(5.2, 3.6))
    seen = {}
    for t, g, lab in zip(tau, g2, labels):
        seen.setdefault(lab, ([], []))
        seen[lab][0].append(t)
        seen[lab][1].append(g)
    for lab, (ts, gs) in seen.items():
        ax.plot(ts, gs, label=lab)
    ax.axhline(1.0, color="gray", lw=0.6)
    ax.set_xlabel("tau (units of 1/Gamma)")
    ax.set_ylabel("g2")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_validate(columns, rows, path):
    err = _column(columns, rows, "rel_err")
    tol = _column(columns, rows, "tol")
    labels = _column(columns, rows, "component", as_float=False)
    fig, ax = plt.subplots(figsize=(6.5, 3.4))
    idx = np.arange(err.size)
    ax.bar(idx, np.maximum(err, 1e-18), color="tab:blue")
    ax.plot(idx, tol, "r_", markersize=10, label="tolerance")
    ax.set_yscale("log")
    ax.set_ylabel("relative error")
    ax.set_xticks(idx)
    ax.set_xticklabels(labels, fontsize=5, rotation=90)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


_RENDERERS = {
    "dispersion": _render_dispersion,
    "field-map": _render_field_map,
    "sweep": _render_sweep,
    "g2": _render_g2,
    "validate": _render_validate,
}


def render(kind: str, columns, rows, path):
    """Render the figure for a subcommand's table to ``path`` (PNG)."""
    _RENDERERS[kind](columns, rows, path)
