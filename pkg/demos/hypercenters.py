"""
Hypercenters of Delta(G)
========================

For G of type (3,5,7) with ranks (1,1,2) and p = 3 the class is 6, and every
term of the upper central series is cut out of Delta(G) by congruences on
the entries of C in C + 1.
"""

from deltanil import group_type, ucs_report
from deltanil.render import render_hypercenter, render_report

g = group_type(3, (3, 5, 7), (1, 1, 2))
rep = ucs_report(g)
print(f"l = {rep.l}, y = {rep.y}, class = {rep.nilpotency_class} ({rep.applicability.tag.value})")

# a generic element of Z_t, written out entry by entry
for d in rep.ucs:
    print(f"\nZ_{d.t}")
    print(render_hypercenter(d))

# with r_s = 1 the last cell never has to saturate, so the class drops to y
h = group_type(3, (2, 4, 7))
rep2 = ucs_report(h)
print(f"\n{h}: l = {rep2.l}, y = {rep2.y}, class = {rep2.nilpotency_class}")

# LaTeX for pasting into notes
print()
print(render_hypercenter(rep2.ucs[1], "latex"))

# the whole report, as the CLI would print it
print()
print(render_report(rep2))
