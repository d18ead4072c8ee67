# coding: utf-8

# # Bracketing Si(pi/2)
#
# Integrating the pointwise bounds for sinc over [0, pi/2] gives intervals
# for the sine integral.  The unimodal regime yields the tightest one.

import numpy as np

from oppenheim import quadrature as qd

si = qd.si_half_pi()
print("quadrature:", si)
print("series:    ", qd.si_half_pi_series())

# ## Upper bound U(p) over the middle regime, and its minimiser

ps = np.linspace(0.5, 2 / np.pi, 9)[1:-1]
for p in ps:
    print(f"p={p:.4f}  L={qd.lower_bound_L(p):.8f}  U={qd.upper_bound_U(p):.8f}")

p0 = qd.optimal_p0_numeric()
print("p0 from the cubic:", p0, " closed form:", qd.optimal_p0_closed_form())

# ## All intervals, narrowest first

for s in sorted(qd.all_bound_sets(), key=lambda s: s.width):
    print(f"{s.name:16} {s.lower!s:>20} {s.upper!s:>20}  contains Si: {s.contains(si)}")
