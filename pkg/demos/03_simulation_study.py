#!/usr/bin/env python3
"""A small version of the simulation study: error against sample size.

Samples a compactly-supported bump on the unit disk, fits with the
sample-size-driven smoothness budget M(n) = n^(1/10), and scores sup and
RMS error on a fixed grid.  The full sweeps (n in {8, 23, 38, 84, 180}
and noise levels 2^-5..2^-1, five seeds each) are what the acceptance
suite runs; this demo keeps to three sample sizes and one seed so it
finishes in about a minute.

Pass --full to reproduce both full sweeps into results/ (~40 minutes).
"""
import sys
import time
import warnings

from smoothfit.simulate import SimConfig, figure_sweep_configs, run_experiment, run_sweep

warnings.filterwarnings("ignore", message="data may not be a fine net")

if "--full" in sys.argv:
    for kind, out in (("n", "results/sweep_n"), ("sigma", "results/sweep_sigma")):
        t0 = time.time()
        path = run_sweep(figure_sweep_configs(kind), out)
        print(f"{kind}-sweep records: {path}  ({time.time() - t0:.0f}s)")
    sys.exit(0)

print(" n   sup_error   rmse     seconds")
for n in (8, 23, 84):
    rec = run_experiment(SimConfig(n=n, sigma=0.0, seed=1000))
    print(f"{rec.n:3d}   {rec.sup_error:.4f}   {rec.rmse:.4f}   {rec.runtime_seconds:6.1f}")
print("\nerror decreases as n grows; the budget M(n) loosens slowly,")
print("letting the fit track the target once enough samples pin it down")
