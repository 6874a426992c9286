"""Vertex permutations of the cross-polytope and the symmetry groups of ``B(i, d)``.

A permutation is a tuple ``perm`` of length ``2d`` over vertex indices ordered
``x_1, ..., x_d, y_1, ..., y_d``: ``perm[k]`` is the index of the image of
vertex ``k``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import WIDTH, Face, PureComplex

Perm = tuple


class ClosureLimitError(RuntimeError):
    pass


def _x(j: int, d: int) -> int:
    return (j - 1) % d


def _y(j: int, d: int) -> int:
    return d + (j - 1) % d


def identity(d: int) -> Perm:
    return tuple(range(2 * d))


def generator(name: str, d: int) -> Perm:
    """One of the named generators ``D``, ``E``, ``R``, ``Rprime`` (alias ``R'``)."""
    if d < 1:
        raise ValueError("d must be positive")
    img = [0] * (2 * d)
    for j in range(1, d + 1):
        if name == "D":
            img[_x(j, d)], img[_y(j, d)] = _y(j, d), _x(j, d)
        elif name == "E":
            img[_x(j, d)], img[_y(j, d)] = _x(d - j + 1, d), _y(d - j + 1, d)
        elif name == "R":
            img[_x(j, d)], img[_y(j, d)] = _x(j + 1, d), _y(j + 1, d)
        elif name in ("Rprime", "R'"):
            if j < d:
                img[_x(j, d)], img[_y(j, d)] = _x(j + 1, d), _y(j + 1, d)
            else:
                img[_x(d, d)], img[_y(d, d)] = _y(1, d), _x(1, d)
        else:
            raise ValueError(f"unknown generator {name!r}")
    perm = tuple(img)
    if sorted(perm) != list(range(2 * d)):
        raise AssertionError(f"{name} is not a bijection")
    return perm


def compose(p: Perm, q: Perm) -> Perm:
    """``p ∘ q``: apply ``q`` first."""
    return tuple(p[k] for k in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def power(p: Perm, n: int) -> Perm:
    out = identity(len(p) // 2)
    base = p if n >= 0 else inverse(p)
    for _ in range(abs(n)):
        out = compose(base, out)
    return out


def _bit(k: int, d: int) -> int:
    return 1 << k if k < d else 1 << (WIDTH + k - d)


def apply_to_face(p: Perm, face: Face) -> Face:
    d = len(p) // 2
    out = 0
    for k in range(2 * d):
        if face & _bit(k, d):
            out |= _bit(p[k], d)
    return out


def apply(p: Perm, K: PureComplex) -> PureComplex:
    if len(p) != 2 * K.d:
        raise ValueError("permutation size does not match the ambient dimension")
    return PureComplex(K.d, frozenset(apply_to_face(p, t) for t in K.facets), K.dim)


def preserves(p: Perm, K: PureComplex) -> bool:
    return apply(p, K).facets == K.facets


def is_centrally_symmetric(K: PureComplex) -> bool:
    """``D`` maps ``K`` to itself and no nonempty face is fixed by ``D`` or meets its image."""
    D = generator("D", K.d)
    if not preserves(D, K):
        return False
    for level in K.faces.values():
        for f in level:
            g = apply_to_face(D, f)
            if f and (f & g or f == g):
                return False
    return True


RELATIONS = {
    "D^2 = id": lambda g, d: power(g["D"], 2) == identity(d),
    "E^2 = id": lambda g, d: power(g["E"], 2) == identity(d),
    "R^d = id": lambda g, d: power(g["R"], d) == identity(d),
    "ERE = R^-1": lambda g, d: compose(g["E"], compose(g["R"], g["E"])) == inverse(g["R"]),
    "DE = ED": lambda g, d: compose(g["D"], g["E"]) == compose(g["E"], g["D"]),
    "DR = RD": lambda g, d: compose(g["D"], g["R"]) == compose(g["R"], g["D"]),
    "R'^d = D": lambda g, d: power(g["Rprime"], d) == g["D"],
    "R'^2d = id": lambda g, d: power(g["Rprime"], 2 * d) == identity(d),
    "ER'E = R'^-1": lambda g, d: compose(g["E"], compose(g["Rprime"], g["E"])) == inverse(g["Rprime"]),
}

_NEEDS = {
    "D^2 = id": {"D"},
    "E^2 = id": {"E"},
    "R^d = id": {"R"},
    "ERE = R^-1": {"E", "R"},
    "DE = ED": {"D", "E"},
    "DR = RD": {"D", "R"},
    "R'^d = D": {"Rprime", "D"},
    "R'^2d = id": {"Rprime"},
    "ER'E = R'^-1": {"E", "Rprime"},
}


def check_relations(gens: dict[str, Perm], d: int) -> dict[str, bool]:
    """Evaluate every known relation whose generators are all present in ``gens``.

    ``R'^d = D`` is checked whenever ``Rprime`` is present, building ``D`` if needed.
    """
    g = dict(gens)
    if "Rprime" in g and "D" not in g:
        g["D"] = generator("D", d)
    return {
        name: rel(g, d)
        for name, rel in RELATIONS.items()
        if _NEEDS[name] <= set(g) and (_NEEDS[name] <= set(gens) or name == "R'^d = D")
    }


@dataclass
class GroupReport:
    order: int
    vertex_transitive: bool
    relations_ok: bool
    preserves_complex: bool | None
    relations: dict[str, bool] = field(default_factory=dict)
    orbit: list[int] = field(default_factory=list)


def group_closure(
    gens: dict[str, Perm] | list[Perm],
    complex: PureComplex | None = None,
    bound: int | None = None,
) -> GroupReport:
    """Enumerate the generated group by breadth-first products.

    Parameters
    ----------
    gens : mapping of generator names to permutations, or a bare list
    complex : if given, every generator is checked to preserve its facets
    bound : abort once more than this many elements appear (default ``40 d``)
    """
    named = gens if isinstance(gens, dict) else {f"g{k}": p for k, p in enumerate(gens)}
    perms = list(named.values())
    if not perms:
        raise ValueError("no generators")
    n = len(perms[0])
    if any(len(p) != n for p in perms):
        raise ValueError("generators act on different vertex sets")
    d = n // 2
    bound = 10 * 4 * d if bound is None else bound

    e = identity(d)
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in perms:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > bound:
                    raise ClosureLimitError(f"group closure exceeded {bound} elements")
                queue.append(h)

    orbit = sorted({g[0] for g in seen})
    relations = check_relations(named, d) if isinstance(gens, dict) else {}
    preserved = None if complex is None else all(preserves(p, complex) for p in perms)
    return GroupReport(
        order=len(seen),
        vertex_transitive=len(orbit) == n,
        relations_ok=all(relations.values()),
        preserves_complex=preserved,
        relations=relations,
        orbit=orbit,
    )


def symmetry_generators(i: int, d: int) -> dict[str, Perm]:
    """``D, E, R`` for even ``i`` and ``E, R'`` for odd ``i``."""
    if i % 2 == 0:
        return {name: generator(name, d) for name in ("D", "E", "R")}
    return {name: generator(name, d) for name in ("E", "Rprime")}


def label(k: int, d: int) -> str:
    return f"x{k + 1}" if k < d else f"y{k - d + 1}"
