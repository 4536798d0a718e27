"""End-to-end command line checks: JSON output, exit codes, determinism."""
from __future__ import annotations

import io
import json

import pytest

from quivermoduli import bipartify, dump_quiver
from quivermoduli.cli import main
from helpers import example, kron


@pytest.fixture
def ex_file(tmp_path):
    p = tmp_path / "example.json"
    p.write_text(dump_quiver(example()))
    return str(p)


@pytest.fixture
def k2_file(tmp_path):
    p = tmp_path / "k2.json"
    p.write_text(dump_quiver(kron(2)))
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(ex_file, capsys):
    code, out, err = run(capsys, ["classify", ex_file])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["kind"] == "Wild"
    assert doc["name"] is None
    assert doc["radical"] is None
    assert isinstance(doc["negative"], list)


def test_classify_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(dump_quiver(kron(3))))
    code, out, _ = run(capsys, ["classify", "-"])
    assert code == 0
    assert json.loads(out)["kind"] == "Wild"


def test_output_is_deterministic(ex_file, capsys):
    _, first, _ = run(capsys, ["classify", ex_file])
    _, second, _ = run(capsys, ["classify", ex_file])
    assert first == second


def test_form(ex_file, capsys):
    code, out, _ = run(capsys, ["form", ex_file, "--alpha", "1,1"])
    assert code == 0
    assert json.loads(out) == {"alpha": [1, 1], "tits": -2}
    code, out, _ = run(capsys, ["form", ex_file, "--alpha", "1,1", "--beta", "1,1"])
    assert json.loads(out) == {"alpha": [1, 1], "beta": [1, 1], "euler": -2}


def test_double(ex_file, capsys):
    code, out, _ = run(capsys, ["double", ex_file, "--vertex", "1"])
    assert code == 0
    doc = json.loads(out)
    assert (doc["vertex"], doc["minus"], doc["plus"], doc["e"]) == ("1", "1-", "1+", "e_1")
    assert doc["result"]["vertices"] == ["1-", "1+", "2"]
    assert doc["result"]["arrows"] == [
        {"id": "a11", "from": "1-", "to": "1+"},
        {"id": "a12", "from": "1-", "to": "2"},
        {"id": "a21", "from": "2", "to": "1+"},
        {"id": "a22", "from": "2", "to": "2"},
        {"id": "e_1", "from": "1-", "to": "1+"},
    ]


def test_bipartify(ex_file, capsys):
    code, out, _ = run(capsys, ["bipartify", ex_file, "--alpha", "1,1", "--theta", "0,0", "--n", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["alpha"] == [1, 1, 1, 1]
    assert doc["theta"] == [-1, 1, -1, 1]
    assert [s["n"] for s in doc["steps"]] == [1, 1]

    code, out, _ = run(capsys, ["bipartify", ex_file, "--alpha", "1,1", "--theta", "0,0"])
    doc = json.loads(out)
    assert doc["theta"] == [-1, 1, -2, 2]
    assert [s["n"] for s in doc["steps"]] == [1, 2]
    assert [s["vertex"] for s in doc["steps"]] == ["1", "2"]


def test_stable_dims(k2_file, capsys):
    code, out, _ = run(capsys, ["stable-dims", k2_file, "--alpha", "2,2", "--theta=-1,1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["semistable"] == [[0, 0], [1, 1], [2, 2]]
    assert doc["stable"] == [[1, 1]]


def test_rep_types(k2_file, capsys):
    code, out, _ = run(capsys, ["rep-types", k2_file, "--alpha", "2,2", "--theta=-1,1"])
    assert code == 0
    assert json.loads(out)["types"] == [
        {"slots": [{"beta": [1, 1], "count": 1}, {"beta": [1, 1], "count": 1}]},
        {"slots": [{"beta": [1, 1], "count": 2}]},
    ]


def test_local_and_smooth(ex_file, capsys):
    code, out, _ = run(capsys, ["local", ex_file, "--alpha", "1,1", "--theta", "0,0"])
    assert code == 0
    doc = json.loads(out)
    assert [t["verdict"]["status"] for t in doc["types"]] == ["Smooth", "Smooth"]
    assert doc["types"][1]["setting"]["mu"] == [1]

    code, out, _ = run(capsys, ["smooth", ex_file, "--alpha", "1,1", "--theta", "0,0"])
    doc = json.loads(out)
    assert doc["verdict"]["status"] == "Smooth"
    assert doc["verdict"]["rule"] == "local-setting"


def test_witness(tmp_path, capsys):
    p = tmp_path / "k3.json"
    p.write_text(dump_quiver(kron(3)))
    code, out, _ = run(capsys, ["witness", str(p)])
    assert code == 0
    doc = json.loads(out)
    assert doc["gamma"] == [1, 1]
    assert doc["theta"] == [-1, 1]
    assert doc["alpha"] == [3, 3]
    assert doc["setting"]["mu"] == [3]
    assert doc["verdict"]["status"] == "Singular"


def test_toric_affine(ex_file, capsys):
    code, out, _ = run(capsys, ["toric", ex_file, "--sigma", "0,0"])
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "affine"
    assert doc["cycles"] == [["a11"], ["a12", "a21"], ["a22"]]
    assert doc["verdict"]["status"] == "Smooth"


def test_toric_projective(tmp_path, capsys):
    bq, ba, bt, _ = bipartify(example(), (1, 1), (0, 0), n=1)
    p = tmp_path / "bipartite.json"
    p.write_text(dump_quiver(bq))
    code, out, _ = run(capsys, ["toric", str(p), "--sigma=-1,1,-1,1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "projective"
    assert [g["monomial"] for g in doc["generators"]] == [
        "e_1*e_2", "a22*e_1", "a12*a21", "a11*e_2", "a11*a22",
    ]
    assert doc["relations"] == [{
        "left": [0, 4],
        "right": [1, 3],
        "text": "e_1*e_2 * a11*a22 = a22*e_1 * a11*e_2",
    }]
    assert doc["degree1_generates"] is True
    assert doc["verdict"]["status"] == "Singular"
    assert doc["verdict"]["data"] == ["a12*a21"]


def test_verify_doubling(k2_file, capsys):
    code, out, _ = run(capsys, ["verify-doubling", k2_file, "--alpha", "2,2",
                                "--theta=-1,1", "--vertex", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["n"] == 3
    assert doc["unbalanced_semistable"] == []
    assert doc["transfer_mismatches"] == []

    code, out, _ = run(capsys, ["verify-doubling", k2_file, "--alpha", "2,2",
                                "--theta=-1,1", "--vertex", "1", "--n", "2"])
    doc = json.loads(out)
    assert doc["ok"] is False
    assert len(doc["unbalanced_semistable"]) == 1


def test_vector_file_forms(ex_file, tmp_path, capsys):
    arr = tmp_path / "alpha.json"
    arr.write_text("[1, 1]")
    code, out, _ = run(capsys, ["form", ex_file, "--alpha", f"@{arr}"])
    assert code == 0
    assert json.loads(out)["tits"] == -2

    mapping = tmp_path / "alpha2.json"
    mapping.write_text('{"2": 1, "1": 1}')
    code, out, _ = run(capsys, ["form", ex_file, "--alpha", f"@{mapping}"])
    assert code == 0
    assert json.loads(out)["alpha"] == [1, 1]

    short = tmp_path / "bad.json"
    short.write_text('{"1": 1}')
    code, _, err = run(capsys, ["form", ex_file, "--alpha", f"@{short}"])
    assert code == 1
    assert err.startswith("error:")


def test_error_exit_codes(ex_file, capsys):
    code, _, err = run(capsys, ["form", ex_file, "--alpha", "1,2,3"])
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, ["form", ex_file, "--alpha", "x,y"])
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, ["classify", "/no/such/file.json"])
    assert code == 1 and err.startswith("error:")


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as ei:
        main([])
    assert ei.value.code == 2
    with pytest.raises(SystemExit) as ei:
        main(["no-such-verb", "x.json"])
    assert ei.value.code == 2
    capsys.readouterr()
