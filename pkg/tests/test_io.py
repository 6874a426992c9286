import json

import pytest

from xpol import io
from xpol.crosspoly import build_B, build_boundary, parse_facet


@pytest.mark.parametrize("i,d", [(0, 3), (1, 4), (2, 5), (3, 4)])
def test_round_trips(i, d):
    B = build_B(i, d)
    assert io.from_json(io.to_json(B)) == B
    assert io.from_text(io.to_text(B), d) == B


def test_json_shape():
    doc = json.loads(io.to_json(build_B(0, 3)))
    assert doc == {"d": 3, "dim": 2, "facets": [["x1", "x2", "x3"], ["y1", "y2", "y3"]]}


def test_text_is_sorted_by_word():
    lines = io.to_text(build_B(1, 3)).splitlines()
    words = ["".join(label[0] for label in line.split()) for line in lines]
    assert words == sorted(words)


def test_text_accepts_words_and_comments():
    K = io.from_text("# two simplices\nxxx\n\ny1 y2 y3  # antipode\n")
    assert K == build_B(0, 3)


def test_text_infers_dimension():
    M = io.from_text(io.to_text(build_boundary(0, 3)))
    assert M.d == 3 and M.dim == 1


def test_read_complex(tmp_path):
    p = tmp_path / "b.json"
    p.write_text(io.dumps(build_B(1, 4), "json"))
    assert io.read_complex(p) == build_B(1, 4)
    q = tmp_path / "b.txt"
    q.write_text(io.dumps(build_B(1, 4), "text"))
    assert io.read_complex(q, 4) == build_B(1, 4)
    with pytest.raises(ValueError):
        io.dumps(build_B(1, 4), "yaml")


def test_read_order_keeps_file_order():
    assert io.read_order("yy\nxx\n") == [parse_facet("yy"), parse_facet("xx")]
