"""
Shelling the star of x_d
========================

Facets of the star of x_d are ordered by switch set: smaller sets first,
then lexicographically.  Each facet's restriction is the set of its
vertices sitting at switch positions.
"""

from xpol.complex import face_str, star, x
from xpol.crosspoly import build_B, facet_switch_set
from xpol.shelling import Verdict, danaraj_klee, star_shelling

order = star_shelling(2, 4)
print(f"{'facet':<20}{'switch set':<14}restriction")
for tau, r in zip(order.facets, order.restrictions):
    print(f"{face_str(tau):<20}{str(sorted(facet_switch_set(tau, 4))):<14}{face_str(r)}")

# with ridges in at most two facets, the shelling makes the star a ball
print(danaraj_klee(star(build_B(2, 4), x(4)), order.facets) is Verdict.BALL)

# the same holds in every case up to d = 8
count = 0
for d in range(2, 9):
    for i in range(d):
        star_shelling(i, d)
        count += 1
print(count, "star shellings verified")
