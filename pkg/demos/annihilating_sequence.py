"""
The upper annihilating sequence of the radical
===============================================

Type (3,5,6,8,10) with every rank 1. The radical J of End(G) fills up in
14 steps; each step is an ideal given by one exponent per cell.
"""

import numpy as np

from deltanil import alpha_table, group_type, uas_direct, uas_via_alpha
from deltanil.render import render_exponent_matrix

g = group_type(3, (3, 5, 6, 8, 10))
tab = alpha_table(g)
print(g, "saturates after", tab.t_max, "steps")

# alpha(i, j, t) grows from the bottom-right corner outwards
for t in (1, 2, 3, 7, 14):
    print(f"\nalpha(., ., {t})")
    print(tab.slice(t))

# J_t has exponent n_j - alpha(i, j, t) in cell (i, j)
uas = uas_via_alpha(g)
for t in (1, 9, 14):
    print(f"\nJ_{t}")
    print(render_exponent_matrix(uas[t - 1]))

# the same sequence from the annihilator formula, no alpha involved
same = [m.beta for m in uas] == [m.beta for m in uas_direct(g)]
print("\nrecursion and direct annihilator agree:", same)

# ranks do not enter: a fat group of the same type has the same sequence
fat = group_type(3, (3, 5, 6, 8, 10), (4, 1, 2, 3, 2))
print("rank vector (4,1,2,3,2) gives the same grids:",
      [m.beta for m in uas_direct(fat)] == [m.beta for m in uas])

# how many cells are still growing at each step
sat = tab.saturation()
growing = [int((tab.slice(t) < sat).sum()) for t in range(tab.t_max + 1)]
print("unsaturated cells per step:", growing)
print("mean alpha per step:", np.round(tab.values.mean(axis=(1, 2)), 2).tolist())
