"""Closed-form face numbers, h'-numbers and Sparla's Euler-characteristic bound."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .complex import (
    PureComplex,
    coord_mask,
    coords_of,
    face_str,
    euler_characteristic,
    h_vector,
    missing_faces,
    rank_selected,
)
from .crosspoly import build_B, build_boundary, check_params
from .homology import betti, betti_in_degree, reduced_homology


@dataclass(frozen=True)
class ClosedFormH:
    i: int
    d: int
    values: list[int]


def h_closed_form(i: int, d: int) -> ClosedFormH:
    check_params(i, d)
    if i < 0:
        raise ValueError("i must be non-negative")
    values = [comb(d, j) if j <= i + 1 else (-1) ** (j - i - 1) * comb(d, j) for j in range(d + 1)]
    return ClosedFormH(i, d, values)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _g_cases(i: int, d: int, k: int) -> dict[str, int]:
    """Every case of the boundary g-number formula whose range contains ``k``."""
    out = {}
    if k <= i + 1:
        out["low"] = comb(d, k)
    if i + 1 <= k <= d - i - 1:
        out["middle"] = (-1) ** (k - i - 1) * comb(d, k)
    if k >= d - i - 1:
        out["high"] = -(_sign(k - i) + _sign(d - k - i) + 1) * comb(d, k)
    return out


def g_boundary_closed_form(i: int, d: int) -> list[int]:
    """``g_0..g_d`` of the boundary of ``B(i, d)`` for ``i <= (d-2)//2``.

    Where two cases of the formula overlap they must agree; a disagreement
    raises ``AssertionError``.
    """
    check_params(i, d)
    if not 0 <= i <= (d - 2) // 2:
        raise ValueError(
            f"i={i} outside [0, {(d - 2) // 2}]; use complement parameters "
            f"(the boundary of B({i},{d}) equals that of B({d - i - 2},{d}))"
        )
    g = []
    for k in range(d + 1):
        values = set(_g_cases(i, d, k).values())
        if len(values) != 1:
            raise AssertionError(f"case formulas disagree at k={k}: {values}")
        g.append(values.pop())
    return g


def g_from_h(h: list[int], length: int) -> list[int]:
    """``g_j = h_j - h_{j-1}``, padding ``h`` with zeros up to ``length`` entries."""
    h = list(h) + [0] * (length - len(h))
    return [h[j] - (h[j - 1] if j else 0) for j in range(length)]


def boundary_g_vector(i: int, d: int) -> list[int]:
    """Brute-force ``g_0..g_d`` of the boundary, taking ``h_d = 0``."""
    return g_from_h(h_vector(build_boundary(i, d)), d + 1)


def ns_identity_check(i: int, d: int) -> bool:
    """Check ``h_{d-j} - h_j = (-1)^{d-j-1} C(d,j) χ̃ - g_j(boundary)`` for every ``j``.

    Uses brute-force h-numbers of ``B(i, d)``, brute-force g-numbers of its
    boundary, and ``χ̃ = (-1)^i``.
    """
    h = h_vector(build_B(i, d))
    g = boundary_g_vector(i, d)
    chi = (-1) ** i
    return all(
        h[d - j] - h[j] == _sign(d - j - 1) * comb(d, j) * chi - g[j] for j in range(d + 1)
    )


# -- h' numbers --------------------------------------------------------------

def h_prime(K: PureComplex) -> list[int]:
    """``h'_j = h_j + C(n, j) Σ_{k=1}^{j-1} (-1)^{j-k-1} β_{k-1}`` with ``n = dim + 1``."""
    n = K.dim + 1
    h = h_vector(K)
    beta = betti(K)
    return [
        h[j] + comb(n, j) * sum((-1) ** (j - k - 1) * beta[k - 1] for k in range(1, j))
        for j in range(n + 1)
    ]


def flag_h_prime(K: PureComplex, S) -> int:
    S = list(S)
    return betti_in_degree(rank_selected(K, S), len(S) - 1)


def flag_h_prime_vector(K: PureComplex) -> dict[int, int]:
    """``h'_S`` for every colour set, keyed by coordinate mask."""
    return {m: flag_h_prime(K, coords_of(m)) for m in range(1 << K.d)}


# -- Sparla ------------------------------------------------------------------

def generalized_binomial(q: Fraction, m: int) -> Fraction:
    """``q (q-1) ... (q-m+1) / m!`` for rational ``q``."""
    q = Fraction(q)
    num = Fraction(1)
    for t in range(m):
        num *= q - t
    return num / factorial(m)


@dataclass
class SparlaReport:
    r: int
    k: int
    chi: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    skeleton_present: bool | None = None

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "chi": self.chi,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "skeleton_present": self.skeleton_present,
        }


def sparla_check(chi: int, r: int, k: int) -> SparlaReport:
    if r < 1 or k < r + 1:
        raise ValueError("need r >= 1 and k >= r + 1")
    lhs = Fraction((-1) ** r * comb(2 * r + 1, r + 1) * (chi - 2))
    rhs = 4 ** (r + 1) * generalized_binomial(Fraction(k - 1, 2), r + 1)
    return SparlaReport(r, k, chi, lhs, rhs, lhs <= rhs, lhs == rhs)


@dataclass
class SparlaCounterexample:
    r: int
    i: int
    d: int
    report: SparlaReport
    homology_witness: dict = field(default_factory=dict)
    missing_face: str | None = None

    @property
    def confirmed(self) -> bool:
        return (
            self.report.equality
            and self.report.skeleton_present is False
            and self.homology_witness.get("rank", 0) > 0
            and self.missing_face is not None
        )

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "i": self.i,
            "d": self.d,
            "report": self.report.as_dict(),
            "homology_witness": self.homology_witness,
            "missing_face": self.missing_face,
            "confirmed": self.confirmed,
        }


def sparla_evaluate_boundary(r: int, i: int) -> SparlaReport:
    """Evaluate the bound on the boundary of ``B(i, 2r+2)``, including skeleton presence."""
    d = 2 * r + 2
    M = build_boundary(i, d)
    report = sparla_check(euler_characteristic(M), r, d)
    report.skeleton_present = next(missing_faces(M, r), None) is None
    return report


def sparla_counterexample_report(r: int, i: int) -> SparlaCounterexample:
    """Equality without the ``r``-skeleton on the boundary of ``B(i, 2r+2)``, ``i < r``, same parity."""
    if not (0 <= i < r and (r - i) % 2 == 0):
        raise ValueError("need 0 <= i < r with i and r of the same parity")
    d = 2 * r + 2
    M = build_boundary(i, d)
    report = sparla_check(euler_characteristic(M), r, d)
    missing = next(missing_faces(M, r), None)
    report.skeleton_present = missing is None
    group = reduced_homology(M)[i]
    return SparlaCounterexample(
        r=r,
        i=i,
        d=d,
        report=report,
        homology_witness=group.as_dict(),
        missing_face=None if missing is None else face_str(missing),
    )


def rank_selections(d: int, j: int):
    """Colour sets of size ``j`` as coordinate masks."""
    return (coord_mask(c, d) for c in combinations(range(1, d + 1), j))
