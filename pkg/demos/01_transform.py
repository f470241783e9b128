"""
The Fourier transform of the 1/4 Cantor measure
===============================================

The measure lives on the Cantor set built by repeatedly keeping the outer
quarters of an interval.  Its Fourier transform is the infinite product
prod_k cos(2 pi t / 4**k), which we evaluate with K factors.
"""

import numpy as np

from quartercantor import ProductConfig, is_zero_of_muhat, muhat_atoms, muhat_trunc, tail_bound

cfg = ProductConfig(factors=16, domain_radius=4.0)

# A few values.  mu_hat(1) vanishes because the first factor is cos(pi/2).
for t in (0.0, 0.5, 1.0, 2.0, 3.0):
    print(f"mu_hat({t}) = {muhat_trunc(t, cfg): .12f}")

# How far can the truncated product be from the exact one on |t| <= 4?
print("tail bound with 16 factors:", tail_bound(cfg))
print("tail bound with  4 factors:", tail_bound(ProductConfig(4, 4.0)))

#%% Integer zeros
# mu_hat(n) = 0 exactly when n = 4**a * odd.  The integer test never looks at
# floating point values; compare it with the product anyway.
ns = np.arange(1, 33)
zeros = [int(n) for n in ns if is_zero_of_muhat(int(n))]
print("zeros in 1..32:", zeros)
print("largest |mu_hat| on those:", np.abs(muhat_trunc(np.array(zeros), ProductConfig(25, 32.0))).max())

#%% An independent check
# Averaging exp(2 pi i t x) over the 2**L atoms of the level-L measure gives
# the same number as the L-factor product, through completely different code.
ts = np.linspace(-4, 4, 9)
print("max |atoms - product| at L = K = 12:",
      np.abs(muhat_atoms(ts, 12) - muhat_trunc(ts, ProductConfig(12, 4.0))).max())
