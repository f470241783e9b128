"""Recompute the reference numbers frozen into the test-suite.

Values that have an independent route (the atomic measure) are computed
that way; thresholds for rates of convergence come from measured runs at the
reference settings.  Run with ``python tools/freeze_oracles.py``; it takes
about a minute.
"""
import numpy as np

from quartercantor import (
    additive, canonical, completeness_defect, enumerate_level, is_zero_of_muhat,
    muhat_atoms, periodicity_defect, sample_grid,
)
from quartercantor.numerics import atoms
from quartercantor.spectral import make_grid

print("mu_hat(2), atoms L=24:", repr(muhat_atoms(2.0, 24)))

x = atoms(16)
ns = np.arange(-4096, 4097)
nonzero = np.array([not is_zero_of_muhat(int(n)) for n in ns])
vals = np.array([np.cos(2 * np.pi * n * x).mean() for n in ns[nonzero]])
i = int(np.argmin(np.abs(vals)))
print("zero-set floor over [-4096, 4096], atoms L=16:", repr(abs(vals[i])), "at n =", ns[nonzero][i])

gamma7 = enumerate_level(canonical(), 7).elements
terms = muhat_atoms(0.5 - gamma7.astype(float), 20)
print("c_Gamma7(0.5), atoms L=20:", repr(float(np.sum(terms**2))))

grid = make_grid(-2, 2, 0.01)
for ds in [canonical()] + [additive(p) for p in (3, 5, 7, 9)]:
    for m in (8, 12):
        r = completeness_defect(ds, grid, m, factors=20)
        print(f"{ds.describe():>12} m={m:2d} K=20 deficiency={r.max_deficiency:.3e} "
              f"overshoot={r.max_overshoot:.3e} bound={r.overshoot_bound:.3e}")

for m in (8, 10, 12, 13):
    s = sample_grid(["c0", "c1"], -2, 2, 0.01, m, factors=20)
    print(f"periodicity m={m} K=20: c1 {periodicity_defect(s, 'c1'):.3e} c0 {periodicity_defect(s, 'c0'):.3e}")

s = sample_grid(["c0", "c1", "c0+c1"], -2, 2, 0.01, 7, factors=16)
total = s["c0+c1"]
print("figure1 max|1 - (c0+c1)|:", f"{np.abs(1 - total).max():.3e}",
      "c1 range:", f"{s['c1'].min():.4f}..{s['c1'].max():.4f}")
