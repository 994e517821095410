"""How many columns of I_a x I_b can avoid C_4?

Run with ``python3 demos/c4_free_growth.py``.  Small cases are solved
exactly; larger ones use the greedy construction that the classifier
hands out as its lower-bound witness for the m^(3/2) class.
"""
import numpy as np

from bergekit import named, solve_relative
from bergekit.constructions import c4free_in_product
from bergekit.matrix import identity, product

C4 = named("C4")

# %% exact values of f(C_4, I_a x I_a) for tiny a
for a in (2, 3, 4):
    P = product(identity(a), identity(a))
    if P.ncols <= 24:
        print(f"f(C4, I_{a} x I_{a}) = {solve_relative(C4, P).value}")

# %% greedy sizes against (m/2)^(3/2)
ms = np.array([8, 12, 16, 20, 24, 32, 40])
sizes = np.array([c4free_in_product(int(m)).ncols for m in ms])
ratio = sizes / (ms / 2) ** 1.5
for m, s, r in zip(ms, sizes, ratio):
    print(f"m={m:3d}  columns={s:4d}  ratio={r:.2f}")
