import json
import re

import pytest

from immclass.cli import main

SIMPLEX_BOUNDARY = """\
vertices 5
tet 1 2 3 4 +
tet 0 2 3 4 -
tet 0 1 3 4 +
tet 0 1 2 4 -
tet 0 1 2 3 +
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_sphere(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify", "--builtin", "S3")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["c_rows"]) == 1
    assert doc["c_rows"][0]["fiber_modulus"] == 0


def test_duality_sweep_torus(capsys):
    code, out, _ = run(capsys, "--format", "json", "duality-sweep", "--builtin", "T3", "--bound", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["checked"] == 7 ** 3
    assert doc["status"] == "PASS"
    assert all(r["index"] == 2 * r["d"] for r in doc["rows"])


def test_smale_parity_failure(capsys):
    code, out, err = run(capsys, "ledger", "smale", "--sigma", "1", "--cusps", "0")
    assert code != 0
    assert "odd" in err


@pytest.mark.parametrize("argv", [
    ("classify", "--builtin", "T3"),
    ("homology", "--builtin", "L(4,1)"),
    ("s2", "--builtin", "S1xS2", "--bound", "2"),
    ("classify-chi", "--builtin", "T3", "--chi", "2,4,0"),
    ("consum", "T3:1,2,0:5", "L(4,1):2:3"),
    ("validate", "--builtin", "S3"),
    ("exact-sequence", "--builtin", "L(2,1)"),
    ("ledger", "takase", "--sigma", "1", "--alpha", "1", "--cusps", "2"),
])
def test_json_round_trip_and_text_parity(capsys, argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n" == out
    code, text, _ = run(capsys, "--format", "text", *argv)
    assert code == 0
    ints = re.compile(r"-?\d+")
    assert ints.findall(text) == ints.findall(out)


def test_file_inputs(tmp_path, capsys):
    tri = tmp_path / "s3.tri"
    tri.write_text(SIMPLEX_BOUNDARY)
    code, out, _ = run(capsys, "--format", "json", "homology", "--file", str(tri))
    assert code == 0
    assert [d["homology"]["free_rank"] for d in json.loads(out)["degrees"]] == [1, 0, 0, 1]

    code, out, _ = run(capsys, "export", "--builtin", "T3", "--as", "json")
    pres = tmp_path / "t3.json"
    pres.write_text(out)
    code, out, _ = run(capsys, "--format", "json", "classify-chi", "--file", str(pres), "--chi", "2,0,0")
    assert code == 0
    assert json.loads(out)["fiber_modulus"] == 4


def test_export_triangulation_reparses(tmp_path, capsys):
    code, out, _ = run(capsys, "export", "--builtin", "S1xS2_tri", "--as", "tri")
    assert code == 0
    f = tmp_path / "x.tri"
    f.write_text(out)
    code, out, _ = run(capsys, "--format", "json", "validate", "--file", str(f))
    assert code == 0 and json.loads(out)["valid"]


def test_invalid_triangulation_exits_one(tmp_path, capsys):
    f = tmp_path / "bad.tri"
    f.write_text("\n".join(SIMPLEX_BOUNDARY.splitlines()[:-1]) + "\n")
    code, out, _ = run(capsys, "--format", "json", "validate", "--file", str(f))
    assert code == 1
    assert json.loads(out)["closed"] is False


@pytest.mark.parametrize("argv, fragment", [
    (("classify", "--builtin", "K3"), "unknown builtin"),
    (("classify-chi", "--builtin", "T3", "--chi", "1,x,2"), "malformed"),
    (("classify-chi", "--builtin", "T3", "--chi", "1,2"), "needs 3"),
    (("classify", "--file", "/nonexistent/file.tri"), "cannot read"),
    (("consum", "T3:1"), "descriptor"),
])
def test_usage_errors_exit_two(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_parse_error_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.tri"
    f.write_text("vertices 4\ntet 0 1 1 2\n")
    code, _, err = run(capsys, "validate", "--file", str(f))
    assert code == 2 and "repeated vertex" in err


def test_census_ledger(tmp_path, capsys):
    census = {"seifert": [{"label": "A", "sigma": 0, "cusps": 0, "d": 2, "r": 0},
                          {"label": "B", "sigma": 1, "cusps": 1, "d": 2, "r": 0},
                          {"label": "C", "sigma": 1, "cusps": 0, "d": 2, "r": 3}],
              "curves": [{"label": "x", "d": 3, "r": 5, "r2": 1},
                         {"label": "y", "d": 3, "r": 1, "r2": 1}]}
    f = tmp_path / "census.json"
    f.write_text(json.dumps(census))
    code, out, _ = run(capsys, "--format", "json", "ledger", "consistency", "--census", str(f),
                       "--a", "A", "--b", "B")
    assert code == 0 and json.loads(out)["pairs"][0]["consistent"]
    code, out, _ = run(capsys, "--format", "json", "ledger", "consistency", "--census", str(f))
    assert code == 1
    code, out, _ = run(capsys, "--format", "json", "ledger", "rd", "--census", str(f),
                       "--a", "x", "--b", "y")
    assert json.loads(out)["rd"] == {"modulus": 6, "value": 4}
    code, out, _ = run(capsys, "--format", "json", "ledger", "j", "--census", str(f))
    assert code == 0
    assert [e["j"]["value"] for e in json.loads(out)["entries"]] == [0, 0, 2]
    code, _, err = run(capsys, "ledger", "I", "--census", str(f))
    assert code == 2 and "needs the rotation R" in err


def test_inline_ledger(capsys):
    code, out, _ = run(capsys, "--format", "json", "ledger", "I", "--sigma", "1", "--cusps", "1",
                       "--d", "3", "--R", "0")
    doc = json.loads(out)
    assert code == 0
    assert doc["entries"][0]["I"] == {"modulus": 12, "value": 4}
    assert doc["entries"][0]["i"] == {"modulus": 6, "value": 2}
    code, _, err = run(capsys, "ledger", "I", "--sigma", "0", "--cusps", "1", "--d", "1", "--R", "0")
    assert code == 2 and "odd" in err


def test_consum_sphere(capsys):
    code, out, _ = run(capsys, "--format", "json", "consum", "d=3:i=5", "--sphere", "4")
    assert json.loads(out)["i"] == {"modulus": 6, "value": 3}
