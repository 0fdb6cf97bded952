from __future__ import annotations

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from coxeterk.cli import main
from coxeterk.polyhedron import coxeter_matrix_of, cube, dumps, generate, parse_input, prism
from coxeterk.report import Report, build_report

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_prism(capsys, write):
    code, out, _ = run(capsys, "validate", write("p.json", dumps(prism(6).to_document())))
    assert code == 0
    assert out.strip() == "PassNecessary (Indeterminate: Andreev inequalities unchecked)"


def test_validate_nonplanar_matrix(capsys, write):
    labels = [[i, j, 2] for i in range(1, 6) for j in range(i + 1, 6)]
    doc = json.dumps({"format": "coxeter-matrix", "size": 5, "labels": labels})
    code, out, _ = run(capsys, "validate", write("k5.json", doc))
    assert code == 2 and out.startswith("Fail: NotPlanar")


def test_validate_parse_error(capsys, write):
    doc = json.dumps({"format": "coxeter-matrix", "size": 4, "labels": [[1, 2, 1]]})
    code, _, err = run(capsys, "validate", write("bad.json", doc))
    assert code == 1 and "ParseError" in err and "$.labels[0]" in err


def test_validate_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "none.json"))
    assert code == 1 and "cannot read" in err


def test_validate_structural_failure(capsys, write):
    doc = prism(5).to_document()
    doc["vertices"] = doc["vertices"][:-1]
    code, out, _ = run(capsys, "validate", write("p.json", json.dumps(doc)))
    assert code == 2 and out.startswith("Fail: InvalidPolyhedron")


def test_compute_cube6_k_minus1(capsys, write):
    code, out, _ = run(capsys, "compute", write("c.json", dumps(cube(6).to_document())), "--degree", "-1")
    assert code == 0 and out.strip() == "K_-1 = Z^5"


def test_compute_prism7_wh(capsys, write):
    code, out, _ = run(capsys, "compute", write("p.json", dumps(prism(7).to_document())), "--degree", "1")
    assert out.strip() == "Wh = 7*NK_1(Z[D_2]) = (Z/2)^(inf)"


def test_compute_cube7_all(capsys, write):
    code, out, _ = run(capsys, "compute", write("c.json", dumps(cube(7).to_document())), "--quiet")
    assert out.splitlines() == [
        "Wh = Z^6 (+) 3*NK_1(Z[D_2]) (+) NK_1(Z[D_7]) = Z^6 (+) (Z/2)^(inf) (+) NK_1(Z[D_7])",
        "K~_0 = 3*NK_0(Z[D_2]) (+) NK_0(Z[D_7]) = (Z/2)^(inf) (+) NK_0(Z[D_7])",
        "K_-1 = Z^2",
        "K_n = 0 for n <= -2",
    ]


def test_compute_from_matrix(capsys, write):
    doc = dumps(coxeter_matrix_of(cube(6)).to_document())
    code, out, _ = run(capsys, "compute", write("m.json", doc), "--degree", "0")
    assert out.strip() == (
        "K~_0 = (Z/2)^4 (+) 5*NK_0(Z[D_2]) (+) NK_0(Z[D_6]) = (Z/2)^(inf) (+) NK_0(Z[D_6])"
    )


def test_compute_json_round_trip(capsys, write):
    code, out, _ = run(capsys, "compute", write("c.json", dumps(cube(4).to_document())), "--json")
    data = json.loads(out)
    report = Report.from_dict(data)
    assert report == build_report(cube(4))
    assert report.to_dict() == data
    codes = [w["code"] for w in data["warnings"]]
    assert "reference-mismatch" in codes


def test_compute_fail_exit(capsys, write):
    labels = [[i, j, 2] for i in range(1, 6) for j in range(i + 1, 6)]
    doc = json.dumps({"format": "coxeter-matrix", "size": 5, "labels": labels})
    code, out, _ = run(capsys, "compute", write("k5.json", doc))
    assert code == 2 and "NotPlanar" in out


def test_text_and_json_carry_same_k_groups():
    for P in (cube(2), cube(8), prism(6)):
        r = build_report(P)
        data = json.loads(r.to_json())
        text = r.render_text()
        for k in ("1", "0", "-1"):
            assert data["k_groups"][k]["text"] in text


def test_gen_documents(capsys):
    code, out, _ = run(capsys, "gen", "prism", "5")
    assert code == 0 and parse_input(out).faces == prism(5).faces
    code, out, _ = run(capsys, "gen", "cube", "6")
    assert out == dumps(cube(6).to_document())
    code, out, _ = run(capsys, "gen", "cube", "6", "--matrix")
    assert parse_input(out) == coxeter_matrix_of(cube(6))


def test_gen_out_of_range(capsys):
    code, _, err = run(capsys, "gen", "cube", "1")
    assert code == 2 and "n >= 2" in err


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--max-n", "10")
    assert code == 0
    rows = [line for line in out.splitlines() if line.endswith("ok")]
    assert len(rows) == 17
    assert "D_6" in out and any(r.split()[:3] == ["D_6", "1", "1"] for r in rows)
    assert any(r.split()[:5] == ["D_6", "x", "Z_2", "3", "3"] for r in rows)
    assert any(r.split()[:5] == ["A_5", "x", "Z_2", "2", "2"] for r in rows)


def test_oracle_bound(capsys):
    code, _, err = run(capsys, "oracle", "--max-n", "61")
    assert code == 2


TEXT_GOLDEN = [("prism", n) for n in range(5, 13)] + [("cube", n) for n in range(2, 13)]


@pytest.mark.parametrize("family, n", TEXT_GOLDEN)
def test_golden_text(family, n):
    assert build_report(generate(family, n)).render_text() == (GOLDEN / f"{family}{n}.txt").read_text()


@pytest.mark.parametrize("family, n", [("prism", 7), ("cube", 4), ("cube", 6), ("cube", 7), ("cube", 8)])
def test_golden_json(family, n):
    assert build_report(generate(family, n)).to_json() == (GOLDEN / f"{family}{n}.json").read_text()


def test_module_entry_point(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(dumps(cube(3).to_document()))
    proc = subprocess.run(
        [sys.executable, "-m", "coxeterk", "compute", str(path), "--degree", "-1"],
        capture_output=True, text=True, env={**os.environ},
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "K_-1 = Z^2"
