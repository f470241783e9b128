"""
Cuntz isometries on exponential labels
======================================

S0 and S1 send e_n to e_{4n} and e_{4n+1}.  Since every operator here maps a
basis exponential to another one (or to 0), identities between them reduce
to bookkeeping on integer labels.
"""

from quartercantor import (
    additive, canonical, cuntz_check, enumerate_level, lemma_us1_check, m_shift, s0, s0_adj, s1, s1_adj,
    u_p, w_tilde, w_tilde_bijection_check,
)
from quartercantor.operators import add, compose

gamma = list(enumerate_level(canonical(), 3))
print("S0 on Gamma_3:", [s0()(n) for n in gamma])
print("S1 on Gamma_3:", [s1()(n) for n in gamma])
print("S0* on 20, 21:", s0_adj()(20), s0_adj()(21))

# S0 S0* + S1 S1* acts as the identity on the basis
proj = add(compose(s0(), s0_adj()), compose(s1(), s1_adj()))
print("projections sum to identity:", all(proj(n) == n for n in gamma))

#%% Conjugating S1 by U_p multiplies by e_{p-1}
p = 5
print("U_5 S1 e_1 =", compose(u_p(p), s1())(1), "  M_4 S1 U_5 e_1 =", compose(m_shift(p - 1), compose(s1(), u_p(p)))(1))

#%% W~ moves the odd half of Gamma onto 4 Gamma + p
w = w_tilde(p)
print("W~ on Gamma_3:", {n: w(n) for n in gamma})
print("image equals 4G u (4G+5):", {w(n) for n in gamma} == enumerate_level(additive(p), 3).as_set())

for report in (cuntz_check(8), lemma_us1_check(p, 8), w_tilde_bijection_check(p, 8)):
    print(report.summary_line())
