"""
Equality in Sparla's inequality without the skeleton
=====================================================

For M the boundary of B(i, 2r+2), the two sides of Sparla's inequality
agree whenever i and r have the same parity.  When also i < r, M misses
part of the r-skeleton of the cross-polytope.
"""

from fractions import Fraction

from xpol.complex import euler_characteristic
from xpol.crosspoly import build_boundary
from xpol.enumeration import generalized_binomial, sparla_check, sparla_counterexample_report

# C(5/2, 3) with exact rationals
print(generalized_binomial(Fraction(5, 2), 3))

for r in (1, 2, 3):
    for i in range(2 * r + 1):
        rep = sparla_check(euler_characteristic(build_boundary(i, 2 * r + 2)), r, 2 * r + 2)
        print(f"r={r} i={i}  lhs={str(rep.lhs):>4}  rhs={str(rep.rhs):>4}  equality={rep.equality}")

cx = sparla_counterexample_report(2, 0)
print("missing 2-face:", cx.missing_face)
print("H_0 witness:", cx.homology_witness)
