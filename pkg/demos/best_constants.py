# coding: utf-8

# # Best constants in q sin x/(1 + p cos x) <= x <= r sin x/(1 + p cos x)
#
# For each p > 0 the sharpest constants are q = 1/max f_p and r = 1/min f_p,
# with f_p(x) = sin x / (x (1 + p cos x)) on [0, pi/2].

import numpy as np

from oppenheim import analysis as an
from oppenheim.verify import brute_force_constants

# ## The four regimes

for p in (0.3, 0.5, 0.55, 0.6, 2 / np.pi, 1.0):
    closed = an.paper_constants(p)
    best = an.numeric_constants(p)
    print(f"p={p:.4f}  {an.classify(p).value:6}  closed form q={closed.q:.6f} r={closed.r:.6f}"
          f"   optimal q={best.q:.6f} r={best.r:.6f}")

# ## Where the maximum of f_p sits
#
# In the middle regime f_p rises then falls; the peak is where h(x) = p.

for p in (0.51, 0.55, 0.6, 0.63):
    x = an.critical_point(p)
    print(f"p={p}: x* = {x:.12f}, h(x*) - p = {an.h(x) - p:.1e}")

# ## How far the closed-form q is from optimal

ps = np.linspace(0.5, 2 / np.pi, 200)[1:-1]
gap = [an.numeric_constants(p).q - 4 * p * (1 - p * p) for p in ps]
print("largest gap between optimal q and 4p(1-p^2):", max(gap))

# ## Cross-check against a brute-force grid

c = brute_force_constants(0.55)
print("brute force at p=0.55:", c.q, c.r)
