"""
Spectral functions and the residue pieces c0, c1
================================================

A set is a spectrum when sum_gamma |mu_hat(t - gamma)|**2 == 1 for all t.
Splitting Gamma by lowest digit gives c0 + c1 == 1; the piece c1 turns out
to be 2-periodic.  Only finitely many terms are summed, so what we see is
a small deficiency that shrinks as more terms are kept.
"""

import numpy as np

from quartercantor import additive, canonical, completeness_defect, periodicity_defect, sample_grid, scaled
from quartercantor.spectral import make_grid

# 16 factors and 128 terms per component, as in the published figure.
sample = sample_grid(["c0", "c1", "c0+c1"], -2, 2, 0.01, 7, factors=16)
c1 = sample["c1"]
print("c1 ranges over", c1.min(), "to", c1.max())
print("max |1 - (c0 + c1)|:", np.abs(1 - sample["c0+c1"]).max())
print(sample.to_csv().splitlines()[:4])

#%% Periodicity sharpens with the number of terms
for m in (6, 8, 10):
    s = sample_grid(["c1"], -2, 2, 0.02, m, factors=20)
    print(f"m={m:2d}: max |c1(t+2) - c1(t)| = {periodicity_defect(s, 'c1', 2.0):.2e}")

#%% Additive sets are spectra; 3 * Gamma at this level is visibly not complete
grid = make_grid(-2, 2, 0.02)
for ds in (canonical(), additive(3), additive(9), scaled(3)):
    r = completeness_defect(ds, grid, 9, factors=20)
    print(f"{ds.describe():>12}: deficiency {r.max_deficiency:.2e} at t={r.argmax_t}")
