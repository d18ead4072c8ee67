# coding: utf-8

# # Rational bounds for arcsin
#
# Put t = sin x in an Oppenheim bound and arcsin t is squeezed between
# c t / (1 + p sqrt(1 - t^2)) for suitable (p, c).

import numpy as np

from oppenheim import arcsin_bounds as ab

t = np.linspace(0, 1, 6)
table = np.c_[t, ab.shafer_lower(t), ab.zhu_lower_a(t), ab.zhu_lower_b(t), np.arcsin(t),
              ab.malesevic_upper(t), ab.fink_upper(t)]
np.set_printoptions(precision=6, suppress=True)
print("t, shafer, zhu_a, zhu_b, arcsin, malesevic, fink")
print(table)

# ## Which (p, c) gives each bound

for name, (p, c) in ab.CORRESPONDENCE.items():
    err = np.abs(ab.oppenheim_to_arcsin(p, c, t) - getattr(ab, name)(t)).max()
    print(f"{name:16} p={p:.6f} c={c:.6f}  max diff {err:.1e}")

# ## Worst error of each upper bound

dense = np.linspace(0, 1, 100_001)
for fn in (ab.fink_upper, ab.malesevic_upper):
    print(fn.__name__, (fn(dense) - np.arcsin(dense)).max())
