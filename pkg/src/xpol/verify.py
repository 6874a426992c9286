"""Verification suites for ``B(i, d)`` and sweeps over parameter grids.

Each check is a dict ``{"suite", "check", "claim", "ok", "detail"}``.  Suites
take an optional complex; when omitted they run on ``B(i, d)`` itself, so the
same suites also test a complex read from a file against the claims made for
``B(i, d)``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable

from .complex import (
    PureComplex,
    boundary_complex,
    cross_polytope,
    face_str,
    flag_vectors,
    h_vector,
    intersection,
    link,
    missing_faces,
    reduced_euler_characteristic,
    star,
    x,
    y,
)
from .crosspoly import (
    build_B,
    check_params,
    complement_iso,
    facet_count_B,
    is_face_of_B,
    is_face_of_B_naive,
)
from .enumeration import (
    boundary_g_vector,
    flag_h_prime_vector,
    g_boundary_closed_form,
    h_closed_form,
    ns_identity_check,
    sparla_counterexample_report,
    sparla_evaluate_boundary,
)
from .homology import betti, reduced_homology
from .shelling import (
    ShellingError,
    Verdict,
    danaraj_klee,
    manifold_certificate,
    star_facets_in_prec_order,
    swel,
    verify_shelling,
)
from .symmetry import (
    generator,
    group_closure,
    is_centrally_symmetric,
    preserves,
    symmetry_generators,
)

SUITES = ("skeleton", "symmetry", "complement", "shelling", "manifold", "homology")


def _check(suite: str, check: str, claim: str, ok: bool, detail=None) -> dict:
    return {"suite": suite, "check": check, "claim": claim, "ok": bool(ok), "detail": detail}


def sphere_product_betti(i: int, d: int) -> list[int]:
    """Unreduced Betti numbers of the product of an i-sphere and a (d-i-2)-sphere."""
    n = d - 2
    poly = [0] * (n + 1)
    for a, b in product((0, i), (0, n - i)):
        poly[a + b] += 1
    return poly


def suite_skeleton(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    out = []
    gap = next(missing_faces(K, i), None)
    out.append(_check("skeleton", "contains i-skeleton", "B(i,d) contains the full i-skeleton",
                      gap is None, None if gap is None else {"missing": face_str(gap)}))
    if i <= d - 2:
        j = min(i, d - i - 2)
        gap = next(missing_faces(boundary_complex(K), j), None)
        out.append(_check("skeleton", "boundary contains min(i,d-i-2)-skeleton",
                          "boundary of B(i,d) contains the full min(i,d-i-2)-skeleton",
                          gap is None, {"j": j, "missing": None if gap is None else face_str(gap)}))
    return out


def suite_symmetry(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    out = [_check("symmetry", "centrally symmetric", "B(i,d) is centrally symmetric",
                  is_centrally_symmetric(K))]
    for name in ("D", "E"):
        out.append(_check("symmetry", f"{name} preserves", "D and E act on the facets of B(i,d)",
                          preserves(generator(name, d), K)))
    rot = "R" if i % 2 == 0 else "Rprime"
    out.append(_check("symmetry", f"{rot} preserves",
                      "R acts on B(i,d) for even i, R' for odd i", preserves(generator(rot, d), K)))
    gens = symmetry_generators(i, d)
    rep = group_closure(gens, K)
    out.append(_check("symmetry", "group order 4d", "the generated group has order 4d",
                      rep.order == 4 * d, {"order": rep.order, "generators": sorted(gens)}))
    out.append(_check("symmetry", "vertex transitive", "the action is vertex-transitive",
                      rep.vertex_transitive))
    out.append(_check("symmetry", "relations", "ERE = R^-1, D central; ER'E = R'^-1, R'^d = D",
                      rep.relations_ok, rep.relations))
    return out


def suite_complement(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    comp = cross_polytope(d).facets - K.facets
    other = build_B(d - i - 2, d).facets if d - i - 2 >= -1 else frozenset()
    image = frozenset(complement_iso(t) for t in other)
    return [_check("complement", "A(B(d-i-2,d)) = complement",
                   "the complement of B(i,d) is isomorphic to B(d-i-2,d) via A",
                   image == comp, {"complement_facets": len(comp), "image_facets": len(image)})]


def suite_shelling(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    out = []
    for name, v in (("x", x(d)), ("y", y(d))):
        label = f"star of {name}{d}"
        if v not in K:
            out.append(_check("shelling", label, "switch-set order shells the star", False,
                              {"reason": "vertex missing"}))
            continue
        order = star_facets_in_prec_order(K, v)
        try:
            restrictions = verify_shelling([t for t in K.facets if t & v], order)
        except ShellingError as exc:
            out.append(_check("shelling", label, "switch-set order shells the star", False,
                              {"facet": face_str(exc.facet), "index": exc.index,
                               "minimal": [face_str(m) for m in exc.minimal]}))
            continue
        same = all(r == swel(t, d) for t, r in zip(order, restrictions))
        out.append(_check("shelling", label, "switch-set order shells the star", True,
                          {"facets": len(order)}))
        out.append(_check("shelling", f"{label} restrictions", "restriction of each facet is SwEl",
                          same))
        verdict = danaraj_klee(star(K, v), order)
        out.append(_check("shelling", f"{label} is a ball", "stars are combinatorial balls",
                          verdict is Verdict.BALL, verdict.value))
    return out


def suite_manifold(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    cert = manifold_certificate(K)
    out = [_check("manifold", "combinatorial manifold certificate",
                  "B(i,d) is certified a combinatorial manifold by the star and link induction", cert.ok,
                  cert.failure if not cert.ok else {"steps": len(cert.steps)})]
    if 1 <= i <= d - 1 and K.dim == d - 1 and x(d) in K and y(d) in K:
        meet = intersection(link(K, x(d)), link(K, y(d)))
        target = build_B(i - 1, d - 1).face_set
        out.append(_check("manifold", "link intersection", "lk x_d ∩ lk y_d = B(i-1,d-1)",
                          meet == target))
    return out


def suite_homology(i: int, d: int, K: PureComplex | None = None) -> list[dict]:
    K = build_B(i, d) if K is None else K
    groups = reduced_homology(K)
    expected = [1 if j == i else 0 for j in range(K.dim + 1)]
    ranks = [g.rank for g in groups]
    out = [_check("homology", "reduced homology of a sphere", "H~(B(i,d)) = Z in degree i",
                  ranks == expected and all(not g.torsion for g in groups),
                  [g.as_dict() for g in groups])]
    chi = reduced_euler_characteristic(K)
    out.append(_check("homology", "reduced Euler characteristic", "χ̃(B(i,d)) = (-1)^i",
                      chi == (-1) ** i, chi))
    if 0 <= i <= d - 2 and K.dim == d - 1:
        bd = boundary_complex(K)
        bgroups = reduced_homology(bd)
        got = betti(bd, reduced=False)
        want = sphere_product_betti(i, d)
        out.append(_check("homology", "boundary Betti numbers",
                          "boundary has the homology of S^i x S^(d-i-2)",
                          got == want and all(not g.torsion for g in bgroups),
                          {"betti": got, "expected": want,
                           "torsion": [g.torsion for g in bgroups]}))
    return out


SUITE_FUNCS: dict[str, Callable] = {
    "skeleton": suite_skeleton,
    "symmetry": suite_symmetry,
    "complement": suite_complement,
    "shelling": suite_shelling,
    "manifold": suite_manifold,
    "homology": suite_homology,
}


def run_suites(i: int, d: int, suites=SUITES, K: PureComplex | None = None, jobs: int = 1) -> list[dict]:
    """Run the named suites; results come back in suite order whatever ``jobs`` is."""
    check_params(i, d)
    if i < 0:
        raise ValueError("suites need i >= 0")
    K = build_B(i, d) if K is None else K
    K.faces  # materialize once before fanning out
    funcs = [SUITE_FUNCS[s] for s in suites]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        results = list(pool.map(lambda f: f(i, d, K), funcs))
    return [c for chunk in results for c in chunk]


# -- sweeps ------------------------------------------------------------------

SWEEP_LIMITS = {
    "counting": 16,
    "membership": 8,
    "skeleton": 10,
    "symmetry": 10,
    "complement": 10,
    "shelling": 8,
    "manifold": 8,
    "homology": 8,
    "enumeration": 8,
    "flag": 8,
    "sparla": 8,
}
SWEEP_SUITES = tuple(SWEEP_LIMITS)


def _sweep_counting(d: int) -> list[dict]:
    out = []
    for i in range(d):
        n = len(build_B(i, d))
        out.append(_check("counting", f"facets B({i},{d})", "|B(i,d)| = 2 Σ C(d-1,k)",
                          n == facet_count_B(i, d), n))
    specials = [(0, 2), (1, 2 * d), (d - 2, 2**d - 2), (d - 1, 2**d)]
    for i, want in specials:
        if 0 <= i <= d - 1:
            n = len(build_B(i, d))
            out.append(_check("counting", f"special count B({i},{d})", "special facet counts",
                              n == want, n))
    return out


def _sweep_membership(d: int) -> list[dict]:
    out = []
    C = cross_polytope(d)
    for i in range(d):
        bad = [f for f in C.face_set if is_face_of_B(f, i, d) != is_face_of_B_naive(f, i, d)]
        faces = build_B(i, d).face_set
        wrong = [f for f in C.face_set if (f in faces) != is_face_of_B(f, i, d)]
        out.append(_check("membership", f"filling criterion B({i},{d})",
                          "σ ∈ B(i,d) iff its filling has at most i switches",
                          not bad and not wrong, len(bad) + len(wrong)))
    return out


def _sweep_per_i(name: str, d: int) -> list[dict]:
    out = []
    for i in range(d):
        out.extend({**c, "check": f"{c['check']} B({i},{d})"} for c in SUITE_FUNCS[name](i, d))
    return out


def _sweep_enumeration(d: int) -> list[dict]:
    out = []
    for i in range(d):
        ok = h_closed_form(i, d).values == h_vector(build_B(i, d))
        out.append(_check("enumeration", f"h closed form B({i},{d})", "closed-form h-numbers", ok))
    for i in range((d - 2) // 2 + 1):
        ok = g_boundary_closed_form(i, d) == boundary_g_vector(i, d)
        out.append(_check("enumeration", f"g closed form ∂B({i},{d})", "closed-form boundary g-numbers", ok))
    if d <= 7:
        for i in range(d - 1):
            out.append(_check("enumeration", f"h-g identity B({i},{d})",
                              "h_{d-j} - h_j relation for manifolds with boundary",
                              ns_identity_check(i, d)))
    return out


def _sweep_flag(d: int) -> list[dict]:
    out = []
    for i in range(d):
        B = build_B(i, d)
        hp = flag_h_prime_vector(B)
        ok = all(v == (1 if m.bit_count() <= i + 1 else 0) for m, v in hp.items())
        _, hS = flag_vectors(B)
        h = h_vector(B)
        sums = [sum(v for m, v in hS.items() if m.bit_count() == j) for j in range(d + 1)]
        out.append(_check("flag", f"flag h' B({i},{d})", "h'_S = 1 iff |S| <= i+1", ok))
        out.append(_check("flag", f"flag h sums B({i},{d})", "h_j = Σ_{|S|=j} h_S", sums == h))
    return out


def _sweep_sparla(d: int) -> list[dict]:
    out = []
    if d % 2 or d < 4:
        return out
    r = (d - 2) // 2
    for i in range(2 * r + 1):
        rep = sparla_evaluate_boundary(r, i)
        out.append(_check("sparla", f"inequality ∂B({i},{d})", "Sparla inequality holds",
                          rep.holds and rep.equality == ((i - r) % 2 == 0), rep.as_dict()))
    for i in range(r - 2, -1, -2) if r >= 2 else ():
        rep = sparla_counterexample_report(r, i)
        out.append(_check("sparla", f"equality without skeleton ∂B({i},{d})",
                          "equality does not force the r-skeleton", rep.confirmed, rep.as_dict()))
    return out


_SWEEPERS: dict[str, Callable[[int], list[dict]]] = {
    "counting": _sweep_counting,
    "membership": _sweep_membership,
    "enumeration": _sweep_enumeration,
    "flag": _sweep_flag,
    "sparla": _sweep_sparla,
}


def sweep(d_max: int, suites=SWEEP_SUITES, jobs: int = 1) -> list[dict]:
    """Run sweeps for ``1 <= d <= d_max`` (each suite capped at its own limit).

    Raises ``ValueError`` when ``d_max`` is below 1 or above the limit of a
    requested suite.
    """
    if d_max < 1:
        raise ValueError("d-max must be at least 1")
    for s in suites:
        if s not in SWEEP_LIMITS:
            raise ValueError(f"unknown sweep suite {s!r}")
        if d_max > SWEEP_LIMITS[s]:
            raise ValueError(f"d-max {d_max} exceeds the limit {SWEEP_LIMITS[s]} of suite {s!r}")
    tasks = []
    for s in suites:
        for d in range(1, d_max + 1):
            if s in _SWEEPERS:
                tasks.append((_SWEEPERS[s], d))
            elif d >= 2:
                tasks.append((lambda dd, name=s: _sweep_per_i(name, dd), d))
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        chunks = list(pool.map(lambda t: t[0](t[1]), tasks))
    return [c for chunk in chunks for c in chunk]


def summarize(checks: list[dict]) -> dict:
    failed = [c for c in checks if not c["ok"]]
    return {"passed": len(checks) - len(failed), "failed": len(failed), "ok": not failed}
