"""Shelling orders: the switch-set order on stars, restriction faces, and shelling checks."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .complex import (
    Face,
    boundary_complex,
    generated_by,
    PureComplex,
    face_str,
    intersection,
    link,
    ridge_degrees,
    sorted_faces,
    star,
    x,
    y,
)
from .crosspoly import build_B, check_params, facet_switch_set, is_facet
from .symmetry import apply_to_face, generator


class ShellingError(ValueError):
    """Raised at the first facet whose new faces lack a unique minimal element."""

    def __init__(self, index: int, facet: Face, minimal: list[Face]):
        self.index = index
        self.facet = facet
        self.minimal = minimal
        super().__init__(
            f"not a shelling at position {index}: facet {face_str(facet)} has minimal new faces "
            + ", ".join(face_str(m) for m in minimal)
        )


class Verdict(enum.Enum):
    BALL = "Ball"
    SPHERE = "Sphere"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple
    restrictions: tuple


def prec_key(I: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for the switch-set order: size first, then lexicographic on sorted elements.

    For equal sizes, comparing sorted tuples agrees with "the least element of
    the symmetric difference lies in the smaller set".
    """
    s = tuple(sorted(I))
    return len(s), s


def prec_compare(I: Iterable[int], J: Iterable[int]) -> int:
    a, b = prec_key(I), prec_key(J)
    return (a > b) - (a < b)


def _lex_symdiff_less(I: frozenset, J: frozenset) -> bool:
    diff = I ^ J
    return bool(diff) and min(diff) in I


def prec_compare_by_definition(I: Iterable[int], J: Iterable[int]) -> int:
    """Same order as :func:`prec_compare`, evaluated straight from the symmetric-difference rule."""
    I, J = frozenset(I), frozenset(J)
    if I == J:
        return 0
    if len(I) != len(J):
        return -1 if len(I) < len(J) else 1
    return -1 if _lex_symdiff_less(I, J) else 1


def sort_by_prec(sets: Iterable[Iterable[int]]) -> list[frozenset]:
    return sorted((frozenset(s) for s in sets), key=cmp_to_key(prec_compare))


def swel(tau: Face, d: int) -> Face:
    """Vertices of the facet ``tau`` sitting at its switch positions."""
    if not is_facet(tau, d):
        raise ValueError(f"{face_str(tau)} is not a facet of the {d}-cross-polytope")
    out = 0
    for j in facet_switch_set(tau, d):
        out |= tau & (x(j) | y(j))
    return out


def _minimal_new_faces(tau: Face, earlier: list[Face]) -> list[Face]:
    meets = {tau & s for s in earlier}
    tops = [m for m in meets if not any(m != n and m & ~n == 0 for n in meets)]

    def is_new(f: Face) -> bool:
        return not any(f & ~m == 0 for m in tops)

    minimal = []
    sub = tau
    while True:
        if is_new(sub):
            rest = sub
            ok = True
            while rest:
                low = rest & -rest
                if is_new(sub ^ low):
                    ok = False
                    break
                rest ^= low
            if ok:
                minimal.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & tau
    return sorted_faces(minimal)


def verify_shelling(K: PureComplex | Iterable[Face], order: Sequence[Face]) -> list[Face]:
    """Check that ``order`` is a shelling and return the restriction of each facet.

    ``K`` may be a :class:`PureComplex` or any collection of facet masks (vertex
    masks outside the cross-polytope are fine here; only bit operations are used).

    Raises
    ------
    ValueError
        ``order`` is not a permutation of the facets of ``K``.
    ShellingError
        at the first facet whose set of new faces has no unique minimal element.
    """
    facets = K.facets if isinstance(K, PureComplex) else frozenset(K)
    order = list(order)
    if len(order) != len(facets) or set(order) != set(facets):
        raise ValueError("order is not a permutation of the facets")
    restrictions = []
    for k, tau in enumerate(order):
        minimal = _minimal_new_faces(tau, order[:k])
        if len(minimal) != 1:
            raise ShellingError(k, tau, minimal)
        restrictions.append(minimal[0])
    return restrictions


def star_facets_in_prec_order(K: PureComplex, apex: Face) -> list[Face]:
    return sorted(star(K, apex).facets, key=lambda t: prec_key(facet_switch_set(t, K.d)))


def star_shelling(i: int, d: int, apex: str = "x") -> ShellingOrder:
    """Switch-set order on the star of ``x_d`` (or ``y_d``) in ``B(i, d)``, verified.

    The ``y_d`` order is the image of the ``x_d`` order under the antipodal map.
    """
    check_params(i, d)
    if i < 0:
        raise ValueError("B(-1, d) is void")
    if apex not in ("x", "y"):
        raise ValueError("apex must be 'x' or 'y'")
    B = build_B(i, d)
    order = star_facets_in_prec_order(B, x(d))
    if apex == "y":
        D = generator("D", d)
        order = [apply_to_face(D, t) for t in order]
    restrictions = verify_shelling(star(B, x(d) if apex == "x" else y(d)), order)
    return ShellingOrder(tuple(order), tuple(restrictions))


def danaraj_klee(K: PureComplex, order: Sequence[Face]) -> Verdict:
    """Ball or sphere certificate from a shelling plus ridge degrees at most two."""
    try:
        verify_shelling(K, order)
    except (ShellingError, ValueError):
        return Verdict.NOT_APPLICABLE
    degrees = ridge_degrees(K).values()
    if any(n > 2 for n in degrees):
        return Verdict.NOT_APPLICABLE
    if all(n == 2 for n in degrees):
        return Verdict.SPHERE
    return Verdict.BALL


@dataclass
class ManifoldCertificate:
    ok: bool
    steps: list[dict]

    @property
    def failure(self) -> dict | None:
        return next((s for s in self.steps if not s["ok"]), None)


def _restrict_ambient(faces: Iterable[Face], d: int) -> PureComplex | None:
    faces = list(faces)
    if not faces:
        return None
    return generated_by(d, faces)


def manifold_certificate(K: PureComplex) -> ManifoldCertificate:
    """Certify a full-dimensional subcomplex of the cross-polytope as a combinatorial manifold.

    Mirrors the induction for ``B(i, d)``: ridge degrees are at most two, the
    stars of ``x_d`` and ``y_d`` are balls (switch-set order is a shelling and
    Danaraj-Klee applies), the two stars meet exactly in the intersection of
    the two links, that intersection lies in both star boundaries, and the
    intersection, seen inside the ``(d-1)``-cross-polytope, is certified
    recursively.  Recursion stops at complexes whose facets are pairwise
    disjoint (disjoint simplices).
    """
    steps: list[dict] = []

    def fail(**kw) -> ManifoldCertificate:
        steps.append({"ok": False, **kw})
        return ManifoldCertificate(False, steps)

    while True:
        d = K.d
        tag = f"d={d}"
        degrees = ridge_degrees(K)
        bad = [r for r, n in degrees.items() if n > 2]
        if bad:
            r = sorted_faces(bad)[0]
            return fail(check="ridge degree", at=tag, ridge=face_str(r), degree=degrees[r])
        steps.append({"ok": True, "check": "ridge degree", "at": tag})

        if K.dim >= 2:
            bdegrees = ridge_degrees(boundary_complex(K))
            open_ridges = [r for r, n in bdegrees.items() if n != 2]
            if open_ridges:
                r = sorted_faces(open_ridges)[0]
                return fail(check="boundary is closed", at=tag, ridge=face_str(r), degree=bdegrees[r])
            steps.append({"ok": True, "check": "boundary is closed", "at": tag})

        facets = K.sorted_facets()
        if all(a & b == 0 for n, a in enumerate(facets) for b in facets[n + 1:]):
            steps.append({"ok": True, "check": "disjoint simplices", "at": tag})
            return ManifoldCertificate(True, steps)
        if K.dim != d - 1:
            return fail(check="full dimension", at=tag, dim=K.dim)

        stars = {}
        for name, v in (("x", x(d)), ("y", y(d))):
            if v not in K:
                return fail(check=f"star of {name}{d}", at=tag, reason="vertex missing")
            st = star(K, v)
            order = star_facets_in_prec_order(K, v)
            try:
                verify_shelling(st, order)
            except ShellingError as exc:
                return fail(check=f"star of {name}{d} shelling", at=tag, facet=face_str(exc.facet),
                            index=exc.index, minimal=[face_str(m) for m in exc.minimal])
            verdict = danaraj_klee(st, order)
            if verdict is not Verdict.BALL:
                return fail(check=f"star of {name}{d} is a ball", at=tag, verdict=verdict.value)
            steps.append({"ok": True, "check": f"star of {name}{d} is a ball", "at": tag})
            stars[name] = st

        meet = intersection(stars["x"], stars["y"])
        links = intersection(link(K, x(d)), link(K, y(d)))
        if meet != links:
            return fail(check="stars meet in link intersection", at=tag)
        boundary = intersection(boundary_complex(stars["x"]), boundary_complex(stars["y"]))
        if not meet <= boundary:
            return fail(check="intersection in star boundaries", at=tag)
        steps.append({"ok": True, "check": "stars meet along their boundaries", "at": tag})

        try:
            inner = _restrict_ambient(links, d - 1)
        except ValueError:
            return fail(check="link intersection is pure", at=tag)
        if inner is None or inner.dim != d - 2:
            return fail(check="link intersection has dimension d-2", at=tag)
        K = PureComplex(d - 1, inner.facets, inner.dim)
