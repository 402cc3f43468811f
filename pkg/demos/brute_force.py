"""
Checking against brute force
============================

Small Delta(G) can be listed element by element. The upper central series is
then computed from the group law alone and compared with the congruence
description.
"""

import time

from deltanil import group_type, nilpotency_class, uas_length
from deltanil.oracle import compare_report, enumerate_delta, ucs_oracle
from deltanil.render import render_report

# one instance per guarantee
for p, n, r in [(3, (1, 2), (1, 1)), (2, (1, 3), (1, 1)), (2, (1, 2), (1, 2))]:
    g = group_type(p, n, r)
    t0 = time.perf_counter()
    rep = compare_report(g)
    print(render_report(rep))
    print(f"({time.perf_counter() - t0:.2f}s)\n")

# p = 2 with a top gap of 1 and r_s = 1 carries no guarantee, and indeed
# the third hypercenter of (2,3) is bigger than the congruences predict
rep = compare_report(group_type(2, (2, 3)))
print(render_report(rep))
print("class still bounded by the sequence length:", rep.bound_holds, "\n")

# which small groups have abelian Delta?
for p in (2, 3):
    for n, r in [((1,), (2,)), ((2,), (1,)), ((2,), (2,)), ((3,), (1,)), ((3,), (2,)), ((1, 2), (1, 1))]:
        g = group_type(p, n, r)
        grp = enumerate_delta(g)
        c = ucs_oracle(grp).nilpotency_class
        print(f"{g}: |Delta| = {len(grp):5d}  class {c}  predicted {nilpotency_class(g).value}  l = {uas_length(g)}")
