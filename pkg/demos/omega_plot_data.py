"""Emit (n, omega, model, residue) CSVs for <6,9,20> and <3,7>, plus the fitted models.

The CSVs are the data behind a plot of omega(n) against n with its eventual
quasilinear form. Run: python demos/omega_plot_data.py [outdir]
"""

import sys
from pathlib import Path

from omegaprimality import NumericalMonoid, fit_quasilinear, minimal_period, omega_series

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

for gens, horizon in [([6, 9, 20], 600), ([3, 7], 200)]:
    M = NumericalMonoid(gens)
    series = omega_series(M, 1, horizon)
    model = fit_quasilinear(series)
    path = out / f"omega_{'_'.join(map(str, gens))}.csv"
    path.write_text(series.to_csv(model))
    print(f"<{', '.join(map(str, gens))}>: omega(n) = n // {model.n1} + c[n % {model.n1}]")
    print(f"  c = {list(model.intercepts)}")
    print(f"  last disagreement at n = {model.dissonance}; minimal period {minimal_period(model)}")
    print(f"  wrote {path}")
