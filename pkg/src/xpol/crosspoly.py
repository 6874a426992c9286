"""Switch-bounded subcomplexes of the cross-polytope boundary.

Facets of the boundary of the ``d``-cross-polytope are words of length ``d``
over ``{x, y}``; letter ``j`` is ``x`` iff ``x_j`` is in the facet.  The
complex ``B(i, d)`` is generated by the facets whose words change letter at
most ``i`` times.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable

from .complex import (
    LOW,
    MAX_D,
    WIDTH,
    Face,
    PureComplex,
    boundary_complex,
    face_str,
    make_face,
    support,
    x,
    y,
)

EVEN_LOW = sum(1 << (j - 1) for j in range(2, WIDTH + 1, 2))
EVEN = EVEN_LOW | (EVEN_LOW << WIDTH)


def check_params(i: int, d: int) -> None:
    if not 1 <= d <= MAX_D:
        raise ValueError(f"d={d} outside [1, {MAX_D}]")
    if not -1 <= i <= d - 1:
        raise ValueError(f"i={i} outside [-1, {d - 1}]")


def _full(d: int) -> int:
    return (1 << d) - 1


def is_facet(face: Face, d: int) -> bool:
    return support(face) == _full(d) and face.bit_count() == d


# -- words -------------------------------------------------------------------

def facet_of_word(word: str) -> Face:
    d = len(word)
    if not 1 <= d <= MAX_D or set(word) - {"x", "y"}:
        raise ValueError(f"bad word {word!r}")
    face = 0
    for j, letter in enumerate(word, start=1):
        face |= x(j) if letter == "x" else y(j)
    return face


def word_of_facet(face: Face, d: int) -> str:
    if not is_facet(face, d):
        raise ValueError(f"{face_str(face)} is not a facet of the {d}-cross-polytope")
    return "".join("x" if face >> (j - 1) & 1 else "y" for j in range(1, d + 1))


def parse_facet(text: str, d: int | None = None) -> Face:
    """Accept either a word (``"xyxxy"``) or space/comma separated labels."""
    text = text.strip()
    if text and set(text) <= {"x", "y"}:
        face = facet_of_word(text)
        if d is not None and len(text) != d:
            raise ValueError(f"word {text!r} does not have length {d}")
        return face
    return make_face(t for t in text.replace(",", " ").split() if t)


def switch_mask(face: Face, d: int) -> int:
    """Bit ``j - 1`` set iff letters ``j`` and ``j + 1`` of the facet word differ."""
    xs = face & LOW
    return (xs ^ (xs >> 1)) & _full(d - 1)


def switch_set(word: str) -> frozenset[int]:
    return frozenset(j for j in range(1, len(word)) if word[j - 1] != word[j])


def facet_switch_set(face: Face, d: int) -> frozenset[int]:
    m = switch_mask(face, d)
    return frozenset(j + 1 for j in range(d - 1) if m >> j & 1)


def facet_from_switches(switches: Iterable[int], d: int, first: str = "x") -> Face:
    """The facet whose word starts with ``first`` and switches exactly at ``switches``."""
    cuts = set(switches)
    letter = first
    face = 0
    for j in range(1, d + 1):
        face |= x(j) if letter == "x" else y(j)
        if j in cuts:
            letter = "y" if letter == "x" else "x"
    return face


# -- filling and membership --------------------------------------------------

def fill(sigma: Face, d: int) -> Face:
    """Extend a face to a facet by copying, into each gap, the next letter to the right.

    Coordinates after the last vertex of ``sigma`` copy that vertex.  The
    filling of the empty face is the all-``x`` facet.
    """
    if support(sigma) >> d:
        raise ValueError(f"{face_str(sigma)} is not a face of the {d}-cross-polytope")
    if sigma == 0:
        return _full(d)
    last = support(sigma).bit_length()
    letter_x = bool(sigma >> (last - 1) & 1)
    face = 0
    for j in range(d, 0, -1):
        if sigma & x(j):
            letter_x = True
        elif sigma & y(j):
            letter_x = False
        face |= x(j) if letter_x else y(j)
    return face


def is_face_of_B(sigma: Face, i: int, d: int) -> bool:
    check_params(i, d)
    return switch_mask(fill(sigma, d), d).bit_count() <= i


def is_face_of_B_naive(sigma: Face, i: int, d: int) -> bool:
    """Existential check over every facet containing ``sigma``; exponential in ``d``."""
    free = _full(d) & ~support(sigma)
    sub = free
    while True:
        tau = sigma | sub | ((free & ~sub) << WIDTH)
        if switch_mask(tau, d).bit_count() <= i:
            return True
        if sub == 0:
            return False
        sub = (sub - 1) & free


# -- construction ------------------------------------------------------------

def _facets_with_switch_counts(d: int, counts: Iterable[int]) -> frozenset:
    facets = set()
    for k in counts:
        for cuts in combinations(range(1, d), k):
            facets.add(facet_from_switches(cuts, d, "x"))
            facets.add(facet_from_switches(cuts, d, "y"))
    return frozenset(facets)


def facet_count_B(i: int, d: int) -> int:
    return 2 * sum(comb(d - 1, k) for k in range(i + 1))


def build_B(i: int, d: int) -> PureComplex:
    """``B(i, d)``; ``B(-1, d)`` is the void complex and ``B(d-1, d)`` the whole cross-polytope."""
    check_params(i, d)
    return PureComplex(d, _facets_with_switch_counts(d, range(i + 1)), d - 1)


def build_complement(i: int, d: int) -> PureComplex:
    """Complex generated by the cross-polytope facets that are not in ``B(i, d)``."""
    check_params(i, d)
    return PureComplex(d, _facets_with_switch_counts(d, range(i + 1, d)), d - 1)


def complement_iso(face: Face) -> Face:
    """Swap ``x_j`` and ``y_j`` for every even ``j``; an involution."""
    return (face & ~EVEN) | ((face & EVEN_LOW) << WIDTH) | ((face >> WIDTH) & EVEN_LOW)


def build_boundary(i: int, d: int) -> PureComplex:
    check_params(i, d)
    if i == d - 1:
        raise ValueError("closed complex has empty boundary")
    if i < 0:
        raise ValueError("B(-1, d) is void and has no boundary")
    return boundary_complex(build_B(i, d))
