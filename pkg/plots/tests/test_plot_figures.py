import csv
import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

import plot_figures as pf  # noqa: E402

SCRIPT = Path(__file__).resolve().parents[1] / "plot_figures.py"


def write_records(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(pf.RECORD_COLUMNS)
        for r in rows:
            w.writerow(r)


def write_surface(path, grid_per_axis=8, fn=lambda x1, x2: x1 + 2 * x2):
    step = 2.0 / grid_per_axis
    axis = -1.0 + step * (np.arange(grid_per_axis) + 0.5)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x1", "x2", "value"])
        for a in axis:
            for b in axis:
                w.writerow([a, b, fn(a, b)])


def record_row(n, sigma, seed, sup, rmse):
    return [n, sigma, seed, 1.5, sup, rmse, 1.0, 10]


def make_results(tmp_path, ns=(8, 23), sigmas=(0.03125, 0.5), seed=1000):
    results = tmp_path / "results"
    sn = results / "sweep_n"
    ss = results / "sweep_sigma"
    sn.mkdir(parents=True)
    ss.mkdir(parents=True)
    write_records(sn / "records.csv",
                  [record_row(n, 0.0, seed, 0.2 / n, 0.1 / n) for n in ns])
    write_surface(sn / "surface_target.csv")
    for n in ns:
        write_surface(sn / f"surface_n{n}_sigma0_seed{seed}.csv")
    write_records(ss / "records.csv",
                  [record_row(84, s, seed, 0.1 + s, 0.05 + s) for s in sigmas])
    write_surface(ss / "surface_target.csv")
    for s in sigmas:
        write_surface(ss / f"surface_n84_sigma{s:g}_seed{seed}.csv")
    return results


def test_load_records_validates_columns(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("n,sigma\n1,0\n")
    with pytest.raises(ValueError):
        pf.load_records(bad)


def test_load_surface_roundtrip(tmp_path):
    path = tmp_path / "s.csv"
    write_surface(path, grid_per_axis=6)
    x1, x2, values = pf.load_surface(path)
    assert len(x1) == 6 and len(x2) == 6
    assert not np.any(np.isnan(values))
    # values[i, j] must correspond to (x1[i], x2[j])
    assert values[2, 4] == pytest.approx(x1[2] + 2 * x2[4])


def test_error_curves_two_panels_log_scale(tmp_path):
    records = [dict(n=n, sigma=s, seed=1000, sup_error=0.2, rmse=0.1)
               for n in (8, 23, 84) for s in (0.0, 0.5)]
    fig = pf.plot_error_curves(records, tmp_path / "err.png")
    axes = [ax for ax in fig.axes if ax.has_data()]
    assert len(axes) == 2
    assert all(ax.get_xlabel() == "n" for ax in axes)
    assert all(ax.get_yscale() == "log" for ax in axes)
    # one line per sigma in each panel
    assert all(len(ax.get_lines()) == 2 for ax in axes)
    assert (tmp_path / "err.png").exists()


def test_single_row_records_render(tmp_path):
    records = [dict(n=84, sigma=0.0, seed=1000, sup_error=0.2, rmse=0.1)]
    fig = pf.plot_error_curves(records, tmp_path / "single.png")
    assert (tmp_path / "single.png").exists()
    assert len([ax for ax in fig.axes if ax.has_data()]) == 2


def test_surface_grid_target_first(tmp_path):
    results = make_results(tmp_path)
    panels = pf._surface_panels(results / "sweep_n", "n")
    assert panels[0][0] == "target"
    assert len(panels) == 3  # target + 2 fits
    fig = pf.plot_surface_grid(panels, tmp_path / "grid.png")
    data_axes = [ax for ax in fig.axes
                 if ax.get_visible() and ax.get_xlabel() == "$x_1$"]
    assert len(data_axes) == 3
    assert data_axes[0].get_title() == "target"


def test_surface_grid_requires_panels(tmp_path):
    with pytest.raises(ValueError):
        pf.plot_surface_grid([], tmp_path / "x.png")


def test_main_self_check_json(tmp_path):
    results = make_results(tmp_path)
    out_dir = tmp_path / "figs"
    proc = subprocess.run(
        [sys.executable, str(SCRIPT), "--results-dir", str(results),
         "--out-dir", str(out_dir), "--self-check"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    summary = json.loads(proc.stdout.splitlines()[-1])
    assert summary["error_figure"]["panels"] == 2
    assert summary["error_figure"]["xlabels"] == ["n", "n"]
    assert summary["surface_grid_n"]["panels"] == 3
    assert summary["surface_grid_sigma"]["panels"] == 3
    for name in summary["written"]:
        assert (out_dir / name).exists()


def test_main_errors_without_records(tmp_path):
    proc = subprocess.run(
        [sys.executable, str(SCRIPT), "--results-dir", str(tmp_path),
         "--out-dir", str(tmp_path / "o")],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 2
