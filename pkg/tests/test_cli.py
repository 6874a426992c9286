import json
import subprocess
import sys

import pytest

from xpol import io
from xpol.cli import main
from xpol.crosspoly import build_B


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_boundary_torus(capsys):
    code, out, _ = run(capsys, "build", "--i", "1", "--d", "4", "--target", "boundary")
    assert code == 0
    assert len(json.loads(out)["facets"]) == 16


def test_build_two_simplices_text(capsys):
    code, out, _ = run(capsys, "build", "--i", "0", "--d", "3", "--format", "text")
    assert code == 0 and out == "x1 x2 x3\ny1 y2 y3\n"


def test_build_star_and_complement(capsys, tmp_path):
    path = tmp_path / "s.json"
    assert main(["build", "--i", "2", "--d", "4", "--target", "star", "--out", str(path)]) == 0
    assert len(io.read_complex(path)) == 7
    code, out, _ = run(capsys, "build", "--i", "0", "--d", "3", "--target", "complement")
    assert code == 0 and len(json.loads(out)["facets"]) == 6


@pytest.mark.parametrize("argv", [
    ["build", "--i", "3", "--d", "4", "--target", "boundary"],
    ["build", "--i", "5", "--d", "4"],
    ["build", "--i", "-1", "--d", "4"],
    ["sweep", "--d-max", "0"],
    ["sweep", "--d-max", "9", "--suites", "homology"],
    ["sweep", "--d-max", "3", "--suites", "bogus"],
    ["verify", "nonsense", "--i", "1", "--d", "3"],
    ["check", "sparla", "--r", "2", "--i", "1", "--k", "6"][:5] + ["--i", "9"],
    ["report", "vectors", "--i", "4", "--d", "3"],
    ["build"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_closed_complex_message(capsys):
    _, _, err = run(capsys, "build", "--i", "3", "--d", "4", "--target", "boundary")
    assert "closed complex" in err


def test_face_limit_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("XPOL_MAX_FACES", "50")
    code, _, err = run(capsys, "verify", "homology", "--i", "2", "--d", "5")
    assert code == 2 and "XPOL_MAX_FACES" in err


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--i", "2", "--d", "5", "--suite", "all")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failed"] == 0
    assert {c["suite"] for c in doc["checks"]} == {
        "skeleton", "symmetry", "complement", "shelling", "manifold", "homology"}
    assert all(c["claim"] for c in doc["checks"])


def test_verify_torus_homology(capsys):
    code, out, _ = run(capsys, "verify", "homology", "--i", "1", "--d", "4")
    doc = json.loads(out)
    bd = next(c for c in doc["checks"] if c["check"] == "boundary Betti numbers")
    assert code == 0 and bd["detail"]["betti"] == [1, 2, 1]


def test_verify_corrupted_file(capsys, tmp_path):
    B = build_B(2, 5)
    facets = B.sorted_facets()
    path = tmp_path / "bad.txt"
    path.write_text(io.to_text(type(B).from_facets(5, facets[1:])))
    code, out, _ = run(capsys, "verify", "--i", "2", "--d", "5", "--suite", "manifold", "--input", str(path))
    doc = json.loads(out)
    assert code == 1 and not doc["ok"]
    failure = doc["checks"][0]["detail"]
    assert failure["ridge"].startswith("{")


def test_verify_input_dimension_mismatch(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text(io.to_json(build_B(1, 4)))
    code, _, _ = run(capsys, "verify", "--i", "1", "--d", "5", "--input", str(path))
    assert code == 2


def test_verify_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--i", "1", "--d", "4", "--input", str(tmp_path / "nope"))
    assert code == 2


def test_verify_order_file(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("xxx\nyxx\nyyx\nxyx\nyyy\nxyy\nxxy\nyxy\n")
    code, out, _ = run(capsys, "verify", "skeleton", "--i", "2", "--d", "3", "--order", str(good))
    assert code == 0 and json.loads(out)["checks"][-1]["ok"]
    # the annulus B(1,3) has no shelling at all
    bad = tmp_path / "bad.txt"
    bad.write_text("xxx\nyyx\nyxx\nxyy\nyyy\nxxy\n")
    code, out, _ = run(capsys, "verify", "skeleton", "--i", "1", "--d", "3", "--order", str(bad))
    assert code == 1
    assert json.loads(out)["checks"][-1]["detail"]["index"] == 1


def test_report_vectors(capsys):
    code, out, _ = run(capsys, "report", "vectors", "--i", "1", "--d", "4")
    doc = json.loads(out)
    assert code == 0
    assert doc["boundary"]["g"] == [1, 4, 6, -12, 1]
    assert doc["h"] == [1, 4, 6, -4, 1]
    assert doc["flag"]["1,2"]["h_prime"] == 1 and doc["flag"]["1,2,3"]["h_prime"] == 0
    code, out, _ = run(capsys, "report", "vectors", "--i", "1", "--d", "4", "--format", "text")
    assert code == 0 and out.startswith("B(1,4)")


def test_report_homology(capsys):
    code, out, _ = run(capsys, "report", "homology", "--i", "1", "--d", "4", "--target", "boundary")
    assert code == 0 and json.loads(out)["betti"] == [1, 2, 1]


def test_check_sparla(capsys):
    code, out, _ = run(capsys, "check", "sparla", "--r", "2", "--i", "0")
    doc = json.loads(out)
    assert code == 0 and doc["confirmed"] and doc["report"]["lhs"] == "20"
    code, out, _ = run(capsys, "check", "sparla", "--r", "2", "--i", "1")
    doc = json.loads(out)
    assert code == 0 and doc["report"]["lhs"] == "-20" and not doc["report"]["equality"]
    code, out, _ = run(capsys, "check", "sparla", "--r", "2", "--chi", "4", "--k", "6")
    assert code == 0 and json.loads(out)["equality"]
    code, _, _ = run(capsys, "check", "sparla", "--r", "2", "--chi", "100", "--k", "6")
    assert code == 1


def test_sweep_summary(capsys):
    code, out, _ = run(capsys, "sweep", "--d-max", "5", "--suites", "counting,membership,enumeration")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert set(doc["table"]) == {"counting", "membership", "enumeration"}


def test_sweep_reports_small_d_group_order(capsys):
    code, out, _ = run(capsys, "sweep", "--d-max", "3", "--suites", "symmetry")
    doc = json.loads(out)
    assert code == 1
    assert [f["check"] for f in doc["table"]["symmetry"]["failures"]] == ["group order 4d B(0,2)"]


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "xpol.cli", *argv], capture_output=True, check=False).stdout


def test_byte_identical_across_runs_and_jobs():
    a = _cli("verify", "--i", "2", "--d", "5", "--jobs", "1")
    b = _cli("verify", "--i", "2", "--d", "5", "--jobs", "4")
    c = _cli("verify", "--i", "2", "--d", "5", "--jobs", "4")
    assert a == b == c and a
    s1 = _cli("sweep", "--d-max", "5", "--jobs", "1")
    s2 = _cli("sweep", "--d-max", "5", "--jobs", "3")
    assert s1 == s2 and s1
    t1 = _cli("build", "--i", "2", "--d", "6", "--format", "text")
    assert t1 == _cli("build", "--i", "2", "--d", "6", "--format", "text")
