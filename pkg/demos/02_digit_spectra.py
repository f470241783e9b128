"""
Spectra as digit expansions
===========================

The canonical spectrum is every finite sum of distinct powers of 4.  Scaling
by an odd p, or replacing the lowest digit 1 by an odd p, keeps the
exponentials mutually orthogonal.  All three are base-4 digit systems.
"""

from quartercantor import additive, canonical, contains, enumerate_level, orthogonality_check, scaled

for ds in (canonical(), scaled(5), additive(5)):
    print(f"{ds.describe():>12}:", enumerate_level(ds, 3).elements.tolist())

#%% Self-similarity
# Gamma splits by lowest digit: 4 Gamma (digit 0) and 4 Gamma + 1 (digit 1).
g3 = enumerate_level(canonical(), 3).as_set()
g2 = enumerate_level(canonical(), 2).elements
print("4*Gamma_2        :", (4 * g2).tolist())
print("4*Gamma_2 + 1    :", (4 * g2 + 1).tolist())
print("union == Gamma_3 :", set((4 * g2).tolist()) | set((4 * g2 + 1).tolist()) == g3)

#%% Membership by peeling digits
for n in (21, 22, 7, 23):
    print(n, "in Gamma:", contains(canonical(), n), "| in 4G u (4G+3):", contains(additive(3), n))

#%% Orthogonality is exact arithmetic
# Differences of distinct elements are always 4**a * odd, a zero of mu_hat.
for p in (3, 7, 15):
    print(orthogonality_check(enumerate_level(additive(p), 8)).summary_line())
