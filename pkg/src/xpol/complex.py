"""Pure simplicial complexes living inside the boundary of the cross-polytope.

A face is a plain ``int`` bit mask of fixed width: bit ``j - 1`` marks
``x_j`` and bit ``WIDTH + j - 1`` marks ``y_j``.  Antipodes, subset tests and
supports are then single integer operations.  Vertices within a face are
ordered by ``(coord, sign)`` with ``x`` before ``y``; faces are ordered by
the tuple of their ordered vertices (see :func:`face_key`).
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator

WIDTH = 32
LOW = (1 << WIDTH) - 1
MAX_D = WIDTH
DEFAULT_MAX_FACES = 3**12

Face = int

_LABEL_RE = re.compile(r"^([xy])(\d+)$")


class NotAFaceError(ValueError):
    pass


class FaceLimitError(RuntimeError):
    pass


class NotPseudomanifoldError(ValueError):
    """Some ridge lies in three or more facets."""

    def __init__(self, ridge: Face, degree: int):
        self.ridge = ridge
        self.degree = degree
        super().__init__(
            f"not a pseudomanifold-with-boundary: ridge {face_str(ridge)} lies in {degree} facets"
        )


def max_faces() -> int:
    """Face-enumeration cap, overridable through ``XPOL_MAX_FACES``."""
    return int(os.environ.get("XPOL_MAX_FACES", DEFAULT_MAX_FACES))


# -- vertices and faces ------------------------------------------------------

def x(j: int) -> Face:
    return 1 << (j - 1)


def y(j: int) -> Face:
    return 1 << (WIDTH + j - 1)


def parse_label(label: str) -> Face:
    m = _LABEL_RE.match(label.strip())
    if m is None or not 1 <= int(m.group(2)) <= MAX_D:
        raise ValueError(f"bad vertex label {label!r}")
    j = int(m.group(2))
    return x(j) if m.group(1) == "x" else y(j)


def make_face(labels: Iterable[str]) -> Face:
    """Build a face from labels such as ``["x1", "y3"]``."""
    face = 0
    for lab in labels:
        v = parse_label(lab)
        if face & v:
            raise ValueError(f"repeated vertex {lab!r}")
        face |= v
    if not is_face_of_cross_polytope(face):
        raise ValueError(f"{sorted(labels)} contains an antipodal pair")
    return face


def support(face: Face) -> int:
    """Coordinate mask: bit ``j - 1`` is set iff ``x_j`` or ``y_j`` is in the face."""
    return (face | (face >> WIDTH)) & LOW


def antipode(face: Face) -> Face:
    return ((face & LOW) << WIDTH) | (face >> WIDTH)


def size(face: Face) -> int:
    return face.bit_count()


def is_face_of_cross_polytope(face: Face, d: int | None = None) -> bool:
    if face & LOW & (face >> WIDTH):
        return False
    if face >> (2 * WIDTH):
        return False
    return d is None or support(face) >> d == 0


def vertices(face: Face) -> list[tuple[int, int]]:
    """Ordered ``(coord, sign)`` pairs, sign 0 for ``x`` and 1 for ``y``."""
    out = []
    sup = support(face)
    while sup:
        low = sup & -sup
        j = low.bit_length()
        out.append((j, 0 if face & low else 1))
        sup ^= low
    return out


def face_key(face: Face) -> tuple[int, ...]:
    return tuple(2 * (j - 1) + s for j, s in vertices(face))


def face_labels(face: Face) -> list[str]:
    return [("x" if s == 0 else "y") + str(j) for j, s in vertices(face)]


def face_str(face: Face) -> str:
    return "{" + ", ".join(face_labels(face)) + "}"


def sorted_faces(faces: Iterable[Face]) -> list[Face]:
    return sorted(faces, key=face_key)


def coord_mask(coords: Iterable[int], d: int) -> int:
    mask = 0
    for j in coords:
        if not 1 <= j <= d:
            raise ValueError(f"coordinate {j} outside [1, {d}]")
        mask |= 1 << (j - 1)
    return mask


def coords_of(mask: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)


def cross_polytope_faces(d: int, j: int) -> Iterator[Face]:
    """All ``j``-faces of the boundary of the ``d``-dimensional cross-polytope, in face order."""
    faces = []
    for coords in combinations(range(1, d + 1), j + 1):
        for signs in product((0, 1), repeat=j + 1):
            f = 0
            for c, s in zip(coords, signs):
                f |= x(c) if s == 0 else y(c)
            faces.append(f)
    return iter(sorted_faces(faces))


# -- complexes ---------------------------------------------------------------

@dataclass(frozen=True)
class PureComplex:
    """Pure complex given by its facets, inside the boundary of the ``d``-cross-polytope.

    A complex with no facets is the void complex (it has no faces at all);
    the complex whose only facet is the empty face is ``{∅}``.  The void
    complex keeps the nominal ``dim`` it was built with.
    """

    d: int
    facets: frozenset
    dim: int

    def __post_init__(self):
        if not 1 <= self.d <= MAX_D:
            raise ValueError(f"ambient dimension {self.d} outside [1, {MAX_D}]")
        for f in self.facets:
            if not is_face_of_cross_polytope(f, self.d):
                raise ValueError(f"{f:#x} is not a face of the {self.d}-cross-polytope")
            if f.bit_count() != self.dim + 1:
                raise ValueError(f"facet {face_str(f)} does not have dimension {self.dim}")

    @classmethod
    def from_facets(cls, d: int, facets: Iterable[Face], dim: int | None = None) -> "PureComplex":
        facets = frozenset(facets)
        if dim is None:
            if not facets:
                raise ValueError("dimension of a void complex must be given")
            dim = next(iter(facets)).bit_count() - 1
        return cls(d, facets, dim)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def sorted_facets(self) -> list[Face]:
        return sorted_faces(self.facets)

    @cached_property
    def faces(self) -> dict[int, frozenset]:
        return _closure(self)

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset().union(*self.faces.values())

    def __contains__(self, face: Face) -> bool:
        return any(face & ~t == 0 for t in self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return f"PureComplex(d={self.d}, dim={self.dim}, facets={len(self.facets)})"


def _closure(K: PureComplex) -> dict[int, frozenset]:
    cap = max_faces()
    levels: dict[int, frozenset] = {}
    if K.is_void:
        return {j: frozenset() for j in range(-1, K.dim + 1)}
    current = set(K.facets)
    total = len(current)
    for j in range(K.dim, -1, -1):
        levels[j] = frozenset(current)
        below = set()
        for f in current:
            rest = f
            while rest:
                low = rest & -rest
                below.add(f ^ low)
                rest ^= low
        total += len(below)
        if total > cap:
            raise FaceLimitError(
                f"face closure of {K!r} exceeds {cap} faces; raise XPOL_MAX_FACES to allow it"
            )
        current = below
    levels[-1] = frozenset(current)
    return dict(sorted(levels.items()))


def enumerate_faces(K: PureComplex) -> dict[int, frozenset]:
    """Every face of ``K`` grouped by dimension, the empty face at ``-1``."""
    return K.faces


def cross_polytope(d: int) -> PureComplex:
    full = (1 << d) - 1
    facets = []
    for xs in range(1 << d):
        facets.append(xs | ((full & ~xs) << WIDTH))
    return PureComplex(d, frozenset(facets), d - 1)


def simplex(d: int, face: Face) -> PureComplex:
    return PureComplex(d, frozenset([face]), face.bit_count() - 1)


def _require_face(K: PureComplex, sigma: Face) -> None:
    if sigma not in K:
        raise NotAFaceError(f"{face_str(sigma)} is not a face")


def link(K: PureComplex, sigma: Face) -> PureComplex:
    _require_face(K, sigma)
    facets = frozenset(t & ~sigma for t in K.facets if t & sigma == sigma)
    return PureComplex(K.d, facets, K.dim - sigma.bit_count())


def star(K: PureComplex, sigma: Face) -> PureComplex:
    _require_face(K, sigma)
    return PureComplex(K.d, frozenset(t for t in K.facets if t & sigma == sigma), K.dim)


def skeleton(K: PureComplex, j: int) -> frozenset:
    if not -1 <= j <= K.dim:
        raise ValueError(f"skeleton dimension {j} outside [-1, {K.dim}]")
    return frozenset().union(*(K.faces[k] for k in range(-1, j + 1)))


def ridge_degrees(K: PureComplex) -> dict[Face, int]:
    counts: dict[Face, int] = {}
    for f in K.facets:
        rest = f
        while rest:
            low = rest & -rest
            r = f ^ low
            counts[r] = counts.get(r, 0) + 1
            rest ^= low
    return counts


def boundary_complex(K: PureComplex) -> PureComplex:
    """Complex generated by the ridges of ``K`` lying in exactly one facet."""
    degrees = ridge_degrees(K)
    bad = [r for r, n in degrees.items() if n > 2]
    if bad:
        r = sorted_faces(bad)[0]
        raise NotPseudomanifoldError(r, degrees[r])
    return PureComplex(K.d, frozenset(r for r, n in degrees.items() if n == 1), K.dim - 1)


def intersection(K: PureComplex, L: PureComplex) -> frozenset:
    """Face set of the intersection of two complexes."""
    return K.face_set & L.face_set


def generated_by(d: int, faces: Iterable[Face]) -> PureComplex:
    """Complex whose facets are the maximal elements of ``faces``; must be pure."""
    faces = set(faces)
    if not faces:
        raise ValueError("no faces given")
    by_size = sorted(faces, key=lambda f: -f.bit_count())
    maximal: list[Face] = []
    for f in by_size:
        if not any(f & ~m == 0 for m in maximal):
            maximal.append(f)
    sizes = {m.bit_count() for m in maximal}
    if len(sizes) != 1:
        raise ValueError("faces do not generate a pure complex")
    return PureComplex(d, frozenset(maximal), sizes.pop() - 1)


# -- face numbers ------------------------------------------------------------

def f_vector(K: PureComplex) -> list[int]:
    """``[f_-1, f_0, ..., f_dim]``."""
    return [len(K.faces[j]) for j in range(-1, K.dim + 1)]


def h_from_f(f: list[int]) -> list[int]:
    """Exact coefficients of ``h(x) = f(x - 1)`` for ``f = [f_-1, ..., f_{n-1}]``."""
    n = len(f) - 1
    return [
        sum((-1) ** (k - i) * comb(n - i, k - i) * f[i] for i in range(k + 1))
        for k in range(n + 1)
    ]


def h_vector(K: PureComplex) -> list[int]:
    return h_from_f(f_vector(K))


def reduced_euler_characteristic(K: PureComplex) -> int:
    return sum(-n if j % 2 else n for j, n in zip(range(-1, K.dim + 1), f_vector(K)))


def euler_characteristic(K: PureComplex) -> int:
    return sum((-1) ** j * n for j, n in enumerate(f_vector(K)[1:]))


def contains_face(K: PureComplex, sigma: Face) -> bool:
    return sigma in K


def missing_faces(K: PureComplex, j: int) -> Iterator[Face]:
    """``j``-faces of the ambient cross-polytope that are not faces of ``K``."""
    have = K.faces.get(j, frozenset())
    return (f for f in cross_polytope_faces(K.d, j) if f not in have)


def contains_skeleton(K: PureComplex, j: int) -> bool:
    return next(missing_faces(K, j), None) is None


# -- balanced structure ------------------------------------------------------

def rank_selected(K: PureComplex, S: Iterable[int]) -> PureComplex:
    """Subcomplex of faces supported on the colour classes ``{x_j, y_j}``, ``j`` in ``S``."""
    smask = coord_mask(S, K.d)
    colours = smask | (smask << WIDTH)
    if K.is_void:
        return PureComplex(K.d, frozenset(), smask.bit_count() - 1)
    return generated_by(K.d, (t & colours for t in K.facets))


def flag_f(K: PureComplex, S: Iterable[int]) -> int:
    smask = coord_mask(S, K.d)
    return sum(1 for f in K.faces.get(smask.bit_count() - 1, ()) if support(f) == smask)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def flag_h(K: PureComplex, S: Iterable[int]) -> int:
    S = list(S)
    return _sign(len(S) - 1) * reduced_euler_characteristic(rank_selected(K, S))


def flag_vectors(K: PureComplex) -> tuple[dict[int, int], dict[int, int]]:
    """Flag f- and h-numbers for every colour set, keyed by coordinate mask.

    Computed in bulk from supports of all faces, with the h-numbers obtained
    by inclusion-exclusion over subsets.
    """
    fS = dict.fromkeys(range(1 << K.d), 0)
    for level in K.faces.values():
        for f in level:
            fS[support(f)] += 1
    hS = {}
    for smask in range(1 << K.d):
        total = 0
        sub = smask
        while True:
            total += _sign(smask.bit_count() - sub.bit_count()) * fS[sub]
            if sub == 0:
                break
            sub = (sub - 1) & smask
        hS[smask] = total
    return fS, hS
