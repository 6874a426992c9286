"""
The torus inside the boundary of the 4-cross-polytope
======================================================

B(1,4) is generated by the eight facets whose words switch letter at most
once.  Its boundary is a 16-triangle torus.
"""

import numpy as np

from xpol.complex import f_vector, h_vector
from xpol.crosspoly import build_B, build_boundary, word_of_facet
from xpol.homology import betti, boundary_matrix

B = build_B(1, 4)
print(sorted(word_of_facet(t, 4) for t in B.facets))

# face numbers of B(1,4) and of its boundary
M = build_boundary(1, 4)
print("f(B) =", f_vector(B), " h(B) =", h_vector(B))
print("f(M) =", f_vector(M), " h(M) =", h_vector(M))

# one loop for B, two loops and a 2-cycle for the torus
print("betti(B) =", betti(B, reduced=False))
print("betti(M) =", betti(M, reduced=False))

# the boundary matrices compose to zero
d1 = boundary_matrix(M, 1).to_dense()
d2 = boundary_matrix(M, 2).to_dense()
print("d1 @ d2 == 0:", not np.any(d1 @ d2))
print("ranks:", np.linalg.matrix_rank(d1), np.linalg.matrix_rank(d2))
