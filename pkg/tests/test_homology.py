import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from xpol.complex import PureComplex, cross_polytope, make_face, reduced_euler_characteristic, x, y
from xpol.crosspoly import build_B, build_boundary
from xpol.homology import (
    betti,
    betti_in_degree,
    boundary_matrix,
    invariant_factors,
    is_torsion_free,
    rank_over_q,
    reduced_homology,
    smith_normal_form,
)


def test_snf_small():
    assert smith_normal_form([[2, 4], [6, 8]]).invariant_factors == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    res = smith_normal_form(np.array([[6, 0, 0], [0, 10, 0], [0, 0, 15]]))
    assert res.invariant_factors == [1, 30, 30]


def _det_abs(rows):
    return abs(round(np.linalg.det(np.array(rows, dtype=float))))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda m: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_snf_rank_and_divisibility(M):
    res = smith_normal_form(M)
    f = res.invariant_factors
    assert res.rank == rank_over_q(M) == np.linalg.matrix_rank(np.array(M, dtype=float))
    assert all(b % a == 0 for a, b in zip(f, f[1:]))
    if len(M) == len(M[0]) and res.rank == len(M):
        prod = 1
        for v in f:
            prod *= v
        assert prod == _det_abs(M)


def test_boundary_matrix_squares_to_zero():
    B = build_B(2, 4)
    for j in range(1, B.dim + 1):
        d1 = boundary_matrix(B, j).to_dense()
        d0 = boundary_matrix(B, j - 1).to_dense()
        assert not (d0 @ d1).any()
    bm = boundary_matrix(B, 1)
    assert bm.to_lists() == bm.to_dense().tolist()


def test_boundary_matrix_range():
    with pytest.raises(ValueError):
        boundary_matrix(build_B(0, 3), 3)


def _rp2():
    # top boundary matrix of the six-vertex projective plane
    tri = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
           (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    edges = sorted({tuple(sorted(e)) for t in tri for e in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))})
    index = {e: k for k, e in enumerate(edges)}
    M = [[0] * len(tri) for _ in edges]
    for c, t in enumerate(tri):
        a, b, cc = sorted(t)
        M[index[(b, cc)]][c] += 1
        M[index[(a, cc)]][c] -= 1
        M[index[(a, b)]][c] += 1
    return M


def test_torsion_detected_in_projective_plane():
    res = smith_normal_form(_rp2())
    assert res.rank == 10
    assert res.invariant_factors[:-1] == [1] * 9
    assert res.invariant_factors[-1] == 2


@pytest.mark.parametrize("d", range(1, 8))
def test_family_is_a_homology_sphere(d):
    for i in range(d):
        groups = reduced_homology(build_B(i, d))
        assert [g.rank for g in groups] == [int(j == i) for j in range(d)]
        assert is_torsion_free(groups)


@pytest.mark.parametrize("i,d", [(i, d) for d in range(2, 6) for i in range(d)])
def test_betti_against_float_ranks(i, d):
    faces = oracles.all_faces(oracles.b_facets(i, d))
    assert betti(build_B(i, d)) == oracles.betti_over_q(faces, d - 1)


def test_torus_and_sphere_products():
    M = build_boundary(1, 4)
    assert betti(M, reduced=False) == [1, 2, 1]
    assert betti(M) == [0, 2, 1]
    assert betti(build_boundary(0, 3), reduced=False) == [2, 2]
    assert betti(build_boundary(0, 5), reduced=False) == [2, 0, 0, 2]


def test_betti_in_degree():
    B = build_B(0, 4)
    assert [betti_in_degree(B, j) for j in range(-1, 4)] == [0, 1, 0, 0, 0]
    assert betti_in_degree(B, 7) == 0


def test_empty_and_void():
    assert [g.as_dict() for g in reduced_homology(PureComplex(2, frozenset([0]), -1))] == [
        {"degree": -1, "rank": 1, "torsion": []}
    ]
    with pytest.raises(ValueError):
        reduced_homology(PureComplex(2, frozenset(), 1))


def test_euler_characteristic_matches_homology():
    for d in range(1, 11):
        for i in range(d):
            assert reduced_euler_characteristic(build_B(i, d)) == (-1) ** i


def test_sparse_and_dense_agree():
    C = cross_polytope(5)
    for j in range(C.dim + 1):
        bm = boundary_matrix(C, j)
        assert invariant_factors(bm) == sorted(smith_normal_form(bm.to_dense()).invariant_factors)


def test_single_edges():
    K = PureComplex.from_facets(2, [make_face(["x1", "x2"]), make_face(["y1", "y2"])])
    assert betti(K) == [1, 0]
    assert x(1) | y(2) not in K
