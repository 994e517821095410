"""Exact Bh(m,F) for a handful of small forbidden matrices.

Run with ``python3 demos/exact_values.py``.  Every value comes from the
downset branch and bound; at m <= 4 it is re-derived by searching all
simple matrices, with no downset shortcut.
"""
import numpy as np

from bergekit import named, solve_bh, solve_bh_unrestricted
from bergekit.matrix import identity

# %% a table of exact values, m = 2..6
names = ["G1", "G2", "H1", "H2", "H3", "H8", "C4"]
ms = range(2, 7)
table = np.array([[solve_bh(named(n), m).value for m in ms] for n in names])
print("m:    ", " ".join(f"{m:4d}" for m in ms))
for n, row in zip(names, table):
    print(f"{n:6s}", " ".join(f"{v:4d}" for v in row))

# %% identity matrices: the answer does not depend on m once m >= k
for k in (2, 3, 4):
    print(f"I_{k}:", [solve_bh(identity(k), m).value for m in range(k, 7)])

# %% two small-m surprises.  2m is exceeded for H_8 at m=4 and the
# 4*floor(m/3)+m+1 formula is exceeded for H_2 at m=5.
for name, m, formula in (("H8", 4, 2 * 4), ("H2", 5, 4 * (5 // 3) + 5 + 1)):
    res = solve_bh(named(name), m)
    print(f"Bh({m},{name}) = {res.value} (formula {formula}); witness columns:")
    print("   ", [tuple(s) for s in res.witness.column_sets()])

# %% the unrestricted search agrees
print("unrestricted Bh(4,H8) =", solve_bh_unrestricted(named("H8"), 4).value)
