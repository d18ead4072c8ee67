# coding: utf-8

# # Shape of f_p and the functions behind it
#
# f_p' has the sign of p - h(x), and h climbs from 1/2 to 2/pi.  That single
# fact splits p into decreasing, unimodal and increasing cases.

import numpy as np

from oppenheim import analysis as an
from oppenheim.verify import GridSpec, check_monotone, check_unimodal_max

grid = GridSpec(0.0, np.pi / 2, 20_001)
inner = GridSpec(0.0, np.pi / 2, 20_001, open_lo=True, open_hi=True)

# ## h on a few points

xs = np.array([1e-6, 0.25, np.pi / 4, 1.2, np.pi / 2])
print(np.c_[xs, an.h(xs)])

# ## Monotone cases use the shifted function f_p - 1/(1+p), which keeps its
# digits near x = 0

for p in (0.3, 0.5):
    print(check_monotone(lambda x: an.f_p_excess(x, p), grid, "decreasing").plain())
for p in (2 / np.pi, 1.0):
    print(check_monotone(lambda x: an.f_p_excess(x, p), grid, "increasing").plain())

# ## Unimodal case: worst_x is the location of the grid maximum

r = check_unimodal_max(lambda x: an.f_p(x, 0.55), grid)
print(r.plain(), " x* =", an.critical_point(0.55))

# ## Signs along the chain g'' > 0 => g' > 0 => g > 0 => h' > 0

x = inner.nodes()
for name, fn in [("g''", an.g_second), ("g'", an.g_prime), ("g", an.g), ("h'", an.h_prime)]:
    print(f"min {name:3} = {fn(x).min():.3e}")
