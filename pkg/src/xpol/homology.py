"""Integral simplicial homology through boundary matrices and Smith normal form.

Chains are taken over the augmented complex, so degree ``0`` maps onto the
empty face and all homology returned here is reduced.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .complex import Face, PureComplex, f_vector, sorted_faces, vertices, x, y


@dataclass(frozen=True)
class BoundaryMatrix:
    rows: tuple  # (j-1)-faces in face order
    cols: tuple  # j-faces in face order
    entries: dict = field(default_factory=dict)  # (row, col) -> +-1

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for (r, c), v in self.entries.items():
            out[r, c] = v
        return out

    def to_lists(self) -> list[list[int]]:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out


@dataclass(frozen=True)
class SNFResult:
    diagonal: list[int]
    rank: int

    @property
    def invariant_factors(self) -> list[int]:
        return self.diagonal[: self.rank]


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    rank: int
    torsion: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"degree": self.degree, "rank": self.rank, "torsion": list(self.torsion)}


def boundary_matrix(K: PureComplex, j: int) -> BoundaryMatrix:
    """Signed incidence of ``(j-1)``-faces in ``j``-faces.

    The entry for the face missing the vertex at position ``p`` (0-based, in
    the ``(coord, sign)`` vertex order) is ``(-1)**p``.
    """
    if not 0 <= j <= K.dim:
        raise ValueError(f"degree {j} outside [0, {K.dim}]")
    cols = tuple(sorted_faces(K.faces[j]))
    rows = tuple(sorted_faces(K.faces[j - 1]))
    index = {f: k for k, f in enumerate(rows)}
    entries = {}
    for c, sigma in enumerate(cols):
        for p, bit in enumerate(_ordered_bits(sigma)):
            entries[(index[sigma ^ bit], c)] = -1 if p % 2 else 1
    return BoundaryMatrix(rows, cols, entries)


def _ordered_bits(face: Face) -> list[int]:
    return [x(c) if s == 0 else y(c) for c, s in vertices(face)]


# -- Smith normal form -------------------------------------------------------

def smith_normal_form(M) -> SNFResult:
    """Smith normal form of an integer matrix with exact Python integers.

    Pivots are chosen with minimal absolute value to slow entry growth.
    ``diagonal`` has ``min(m, n)`` entries, nonzero ones first, each dividing
    the next.
    """
    A = [[int(v) for v in row] for row in (M.tolist() if isinstance(M, np.ndarray) else M)]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        pivot = None
        for r in range(t, m):
            for c in range(t, n):
                v = A[r][c]
                if v and (pivot is None or abs(v) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (r, c)
        if pivot is None:
            break
        r, c = pivot
        A[t], A[r] = A[r], A[t]
        for row in A:
            row[t], row[c] = row[c], row[t]

        while True:
            p = A[t][t]
            dirty = False
            for r in range(t + 1, m):
                if A[r][t]:
                    q = A[r][t] // p
                    if q:
                        A[r] = [a - q * b for a, b in zip(A[r], A[t])]
                    if A[r][t]:
                        dirty = True
            for c in range(t + 1, n):
                if A[t][c]:
                    q = A[t][c] // p
                    if q:
                        for row in A:
                            row[c] -= q * row[t]
                    if A[t][c]:
                        dirty = True
            if dirty:
                best = min(
                    [(abs(A[r][t]), r, t) for r in range(t, m) if A[r][t]]
                    + [(abs(A[t][c]), t, c) for c in range(t, n) if A[t][c]]
                )
                _, r, c = best
                A[t], A[r] = A[r], A[t]
                for row in A:
                    row[t], row[c] = row[c], row[t]
                continue
            bad = next(
                ((r, c) for r in range(t + 1, m) for c in range(t + 1, n) if A[r][c] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        diag.append(abs(A[t][t]))
        t += 1
    rank = len(diag)
    return SNFResult(diag + [0] * (min(m, n) - rank), rank)


def _sparse_invariant_factors(bm: BoundaryMatrix) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix.

    Unit entries are eliminated first by unimodular column operations, each
    splitting off an invariant factor of 1; whatever is left goes through
    :func:`smith_normal_form`.
    """
    cols: dict[int, dict[int, int]] = {}
    rows: dict[int, set[int]] = {}
    for (r, c), v in bm.entries.items():
        cols.setdefault(c, {})[r] = v
        rows.setdefault(r, set()).add(c)

    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            col = cols.get(c)
            if not col:
                continue
            unit_rows = [r for r, v in col.items() if v in (1, -1)]
            if not unit_rows:
                continue
            r = min(unit_rows, key=lambda rr: (len(rows[rr]), rr))
            v = col[r]
            for c2 in sorted(rows[r] - {c}):
                other = cols[c2]
                factor = other[r] * v
                for rr, val in col.items():
                    new = other.get(rr, 0) - factor * val
                    if new:
                        other[rr] = new
                        rows[rr].add(c2)
                    elif rr in other:
                        del other[rr]
                        rows[rr].discard(c2)
            for rr in col:
                rows[rr].discard(c)
            del cols[c]
            units += 1
            progress = True

    rest_cols = sorted(c for c, col in cols.items() if col)
    rest_rows = sorted({r for c in rest_cols for r in cols[c]})
    if not rest_cols:
        return [1] * units
    rindex = {r: k for k, r in enumerate(rest_rows)}
    dense = [[0] * len(rest_cols) for _ in rest_rows]
    for k, c in enumerate(rest_cols):
        for r, v in cols[c].items():
            dense[rindex[r]][k] = v
    return [1] * units + smith_normal_form(dense).invariant_factors


def invariant_factors(bm: BoundaryMatrix) -> list[int]:
    return sorted(_sparse_invariant_factors(bm))


def rank_over_q(M) -> int:
    """Rank by fraction-free Gaussian elimination; independent of the Smith route."""
    A = [[int(v) for v in row] for row in (M.tolist() if isinstance(M, np.ndarray) else M)]
    rank = 0
    m = len(A)
    n = len(A[0]) if m else 0
    for c in range(n):
        p = next((r for r in range(rank, m) if A[r][c]), None)
        if p is None:
            continue
        A[rank], A[p] = A[p], A[rank]
        for r in range(rank + 1, m):
            if A[r][c]:
                a, b = A[rank][c], A[r][c]
                g = gcd(a, b)
                A[r] = [(a * y - b * x) // g for x, y in zip(A[rank], A[r])]
        rank += 1
    return rank


# -- homology ----------------------------------------------------------------

def reduced_homology(K: PureComplex) -> list[HomologyGroup]:
    """Reduced integral homology in degrees ``0..dim`` (degree ``-1`` for ``{∅}``)."""
    if K.is_void:
        raise ValueError("the void complex has no homology here")
    f = f_vector(K)
    if K.dim == -1:
        return [HomologyGroup(-1, 1, [])]
    factors = {j: invariant_factors(boundary_matrix(K, j)) for j in range(K.dim + 1)}
    factors[K.dim + 1] = []
    groups = []
    for j in range(K.dim + 1):
        rank = f[j + 1] - len(factors[j]) - len(factors[j + 1])
        torsion = [t for t in factors[j + 1] if t > 1]
        groups.append(HomologyGroup(j, rank, torsion))
    return groups


def betti(K: PureComplex, reduced: bool = True) -> list[int]:
    """Betti numbers ``β_0..β_dim``; ranks over Z equal ranks over Q."""
    out = [g.rank for g in reduced_homology(K)]
    if not reduced and K.dim >= 0:
        out[0] += 1
    return out


def betti_in_degree(K: PureComplex, j: int) -> int:
    """Reduced ``β_j`` alone (degree ``-1`` allowed)."""
    if K.is_void:
        return 0
    if j < -1 or j > K.dim:
        return 0
    f = f_vector(K)
    if j == -1:
        return 1 - (len(invariant_factors(boundary_matrix(K, 0))) if K.dim >= 0 else 0)
    rank_j = len(invariant_factors(boundary_matrix(K, j)))
    rank_up = len(invariant_factors(boundary_matrix(K, j + 1))) if j < K.dim else 0
    return f[j + 1] - rank_j - rank_up


def is_torsion_free(groups: list[HomologyGroup]) -> bool:
    return all(not g.torsion for g in groups)
