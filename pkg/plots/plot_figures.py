#!/usr/bin/env python3
"""Regenerate the figures from the simulation sweep CSVs.

Consumes only the CSV interfaces of the fitting package: a records file
with columns n, sigma, seed, M, sup_error, rmse, runtime_seconds,
iterations, and surface files with columns x1, x2, value.  Produces a
two-panel error figure (sup and RMS error against n, one line per noise
level, log-scaled y) and two six-panel surface grids (the target plus
the five fitted surfaces of the n sweep and of the noise sweep).

With --self-check, a JSON summary of panel counts, axis labels, and
written files is printed on the last stdout line.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

RECORD_COLUMNS = ["n", "sigma", "seed", "M", "sup_error", "rmse",
                  "runtime_seconds", "iterations"]


def load_records(path: str | Path) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(RECORD_COLUMNS) - set(reader.fieldnames or [])
        if missing:
            raise ValueError(f"records file missing columns: {sorted(missing)}")
        rows = []
        for row in reader:
            rows.append({"n": int(row["n"]), "sigma": float(row["sigma"]),
                         "seed": int(row["seed"]),
                         "sup_error": float(row["sup_error"]),
                         "rmse": float(row["rmse"])})
    return rows


def load_surface(path: str | Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read an x1, x2, value CSV back into grid axes and a value matrix."""
    data = np.genfromtxt(path, delimiter=",", names=True)
    x1 = np.unique(data["x1"])
    x2 = np.unique(data["x2"])
    values = np.full((len(x1), len(x2)), np.nan)
    i = np.searchsorted(x1, data["x1"])
    j = np.searchsorted(x2, data["x2"])
    values[i, j] = data["value"]
    return x1, x2, values


def plot_error_curves(records: list[dict], out_path: str | Path):
    """Two panels (sup error, RMS error) against n, one line per sigma."""
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    by_sigma: dict[float, dict[int, list[dict]]] = defaultdict(lambda: defaultdict(list))
    for row in records:
        by_sigma[row["sigma"]][row["n"]].append(row)
    for key, ax in zip(("sup_error", "rmse"), axes):
        for sigma in sorted(by_sigma):
            ns = sorted(by_sigma[sigma])
            med = [float(np.median([r[key] for r in by_sigma[sigma][n]]))
                   for n in ns]
            ax.plot(ns, med, marker="o",
                    label=rf"$\sigma = {sigma:g}$")
        ax.set_xlabel("n")
        ax.set_yscale("log")
        ax.legend(fontsize=8)
    axes[0].set_ylabel("maximum error")
    axes[1].set_ylabel("root mean square error")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    return fig


def plot_surface_grid(panels: list[tuple[str, Path]], out_path: str | Path):
    """Grid of heatmap panels; the first panel is the target surface."""
    if not panels:
        raise ValueError("need at least one surface panel")
    cols = 3
    rows = (len(panels) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(4 * cols, 3.2 * rows),
                             squeeze=False)
    flat = axes.ravel()
    for ax, (title, path) in zip(flat, panels):
        x1, x2, values = load_surface(path)
        im = ax.imshow(values.T, origin="lower", aspect="equal",
                       extent=(x1[0], x1[-1], x2[0], x2[-1]),
                       cmap="viridis")
        ax.set_title(title, fontsize=9)
        ax.set_xlabel("$x_1$")
        ax.set_ylabel("$x_2$")
        fig.colorbar(im, ax=ax, shrink=0.85)
    for ax in flat[len(panels):]:
        ax.set_visible(False)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    return fig


def _surface_panels(sweep_dir: Path, kind: str, seed: int = 1000) -> list[tuple[str, Path]]:
    panels = [("target", sweep_dir / "surface_target.csv")]
    records = load_records(sweep_dir / "records.csv")
    if kind == "n":
        for n in sorted({r["n"] for r in records}):
            sigma = min(r["sigma"] for r in records if r["n"] == n)
            panels.append((f"fit, n = {n}",
                           sweep_dir / f"surface_n{n}_sigma{sigma:g}_seed{seed}.csv"))
    else:
        n = records[0]["n"]
        for sigma in sorted({r["sigma"] for r in records}):
            panels.append((rf"fit, $\sigma$ = {sigma:g}",
                           sweep_dir / f"surface_n{n}_sigma{sigma:g}_seed{seed}.csv"))
    return [(t, p) for t, p in panels if p.exists()]


def _visible_panels(fig) -> list:
    return [ax for ax in fig.axes if ax.get_visible() and ax.has_data()]


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--results-dir", required=True,
                    help="directory holding sweep_n/ and sweep_sigma/")
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--self-check", action="store_true",
                    help="print a JSON summary of panels and labels")
    args = ap.parse_args(argv)

    results = Path(args.results_dir)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    records = []
    for sweep in ("sweep_n", "sweep_sigma"):
        rec_path = results / sweep / "records.csv"
        if rec_path.exists():
            records.extend(load_records(rec_path))
    if not records:
        print("error: no records.csv found under the results directory",
              file=sys.stderr)
        return 2

    written = []
    err_fig = plot_error_curves(records, out_dir / "error_curves.png")
    written.append("error_curves.png")

    grids = {}
    for kind, sweep, name in (("n", "sweep_n", "surfaces_n.png"),
                              ("sigma", "sweep_sigma", "surfaces_sigma.png")):
        sweep_dir = results / sweep
        if not (sweep_dir / "records.csv").exists():
            continue
        panels = _surface_panels(sweep_dir, kind)
        grids[kind] = plot_surface_grid(panels, out_dir / name)
        written.append(name)

    if args.self_check:
        err_axes = [ax for ax in err_fig.axes if ax.has_data()]
        summary = {
            "error_figure": {
                "panels": len(err_axes),
                "xlabels": [ax.get_xlabel() for ax in err_axes],
                "ylabels": [ax.get_ylabel() for ax in err_axes],
            },
            "written": written,
        }
        for kind, fig in grids.items():
            data_axes = [ax for ax in _visible_panels(fig)
                         if ax.get_xlabel() == "$x_1$"]
            summary[f"surface_grid_{kind}"] = {
                "panels": len(data_axes),
                "xlabels": sorted({ax.get_xlabel() for ax in data_axes}),
            }
        print(json.dumps(summary))
    return 0


if __name__ == "__main__":
    sys.exit(main())
