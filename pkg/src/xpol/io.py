"""Facet-list serialization: JSON and one-facet-per-line text."""
from __future__ import annotations

import json
from pathlib import Path

from .complex import PureComplex, face_labels, support
from .crosspoly import parse_facet


def to_json(K: PureComplex) -> str:
    doc = {"d": K.d, "dim": K.dim, "facets": [face_labels(f) for f in K.sorted_facets()]}
    return json.dumps(doc, sort_keys=True) + "\n"


def from_json(text: str) -> PureComplex:
    doc = json.loads(text)
    d = int(doc["d"])
    facets = [parse_facet(" ".join(labels)) for labels in doc["facets"]]
    return PureComplex.from_facets(d, facets, doc.get("dim"))


def to_text(K: PureComplex) -> str:
    """One facet per line, labels space separated, facets in face order.

    For full-support facets this is lexicographic order of their words with ``x < y``.
    """
    return "".join(" ".join(face_labels(f)) + "\n" for f in K.sorted_facets())


def from_text(text: str, d: int | None = None) -> PureComplex:
    """Parse label lines or ``{x,y}`` words; blank lines and ``#`` comments are skipped."""
    facets = [parse_facet(line) for line in _lines(text)]
    if d is None:
        d = max((support(f).bit_length() for f in facets), default=1)
    return PureComplex.from_facets(d, facets)


def read_order(text: str) -> list[int]:
    """Facets in file order, for shelling checks."""
    return [parse_facet(line) for line in _lines(text)]


def _lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def read_complex(path: str | Path, d: int | None = None) -> PureComplex:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_text(text, d)


def dumps(K: PureComplex, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(K)
    if fmt == "text":
        return to_text(K)
    raise ValueError(f"unknown format {fmt!r}")
