import io
import json

import pytest

import worked_examples as wx
from isoblow.cli import main
from isoblow.serial import coords_out, matrix_out


def run(argv, payload=None):
    out = io.StringIO()
    stdin = io.StringIO(payload if isinstance(payload, str) else json.dumps(payload) if payload is not None else "")
    code = main(argv, stdin=stdin, stdout=out)
    return code, out.getvalue()


def test_report_lg2():
    code, text = run(["report", "--family", "lg", "--n", "2"])
    assert code == 0
    rep = json.loads(text)
    assert sorted(map(tuple, rep["nef"]["computed"])) == sorted([(1, 1, 1), (1, 1, 0), (1, 0, 1), (1, 0, 0)])
    assert rep["nef"]["equal"] and rep["K"]["agree"]
    assert rep["verdict"] == "fano"


def test_report_og3_and_lg1():
    rep = json.loads(run(["report", "--family", "og", "--n", "3"])[1])
    assert sorted(map(tuple, rep["nef"]["computed"])) == [(1, 0), (1, 1)]
    code, text = run(["report", "--family", "lg", "--n", "1"])
    assert code == 0
    rep = json.loads(text)
    assert rep["verdict"] == "fano" and rep["nef"] is None
    assert rep["anticanonical_degrees"] == {"gamma_0": 2}


def test_report_is_byte_stable():
    assert run(["report", "--family", "og", "--n", "6"]) == run(["report", "--family", "og", "--n", "6"])


def test_tsv_format():
    code, text = run(["report", "--family", "lg", "--n", "2", "--format", "tsv"])
    assert code == 0
    lines = dict(line.split("\t", 1) for line in text.splitlines())
    assert lines["verdict"] == "fano"
    assert lines["K.closed_form.H"] == "-3"


@pytest.mark.parametrize("family,n", [("lg", 3), ("og", 4)])
def test_verify_all_passes(family, n):
    code, text = run(["verify", "--family", family, "--n", str(n), "--trials", "5", "--seed", "3"])
    assert code == 0
    assert all(r.get("passed", True) for r in json.loads(text)["results"])


def test_verify_spinor_suite():
    code, text = run(["verify", "--suite", "spinor", "--family", "og", "--n", "4", "--trials", "100"])
    assert code == 0
    assert json.loads(text)["results"][0]["checks"] == 3 * 200


def test_verify_is_byte_stable():
    argv = ["verify", "--suite", "charts", "--family", "lg", "--n", "3", "--trials", "4", "--seed", "11"]
    assert run(argv) == run(argv)


@pytest.mark.parametrize("argv", [
    ["report", "--n", "x"],
    ["report", "--family", "sp"],
    ["verify", "--suite", "nope"],
    ["frobnicate"],
    ["report", "--n", "10"],
    ["verify", "--suite", "charts", "--n", "0"],
    ["report", "--family", "og", "--n", "1"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2


def test_eval_chart_reproduces_worked_matrix():
    c, m = wx.lg_l2(0)
    payload = {"family": "LG", "n": 4, "l": 2, "coords": coords_out(c)}
    code, text = run(["eval", "chart"], payload)
    assert code == 0
    out = json.loads(text)
    assert out["matrix"] == matrix_out(m) and out["isotropic"]
    assert run(["eval", "chart"], payload)[1] == text


def test_eval_chart_type2():
    c, m = wx.lg_type2(2)
    payload = {"n": 4, "l": 0, "tau": {"plus": [], "minus": [1]}, "coords": coords_out(c)}
    code, text = run(["eval", "chart"], payload)
    assert code == 0 and json.loads(text)["matrix"] == matrix_out(m)


def test_eval_plucker_and_spinor():
    code, text = run(["eval", "plucker"], {"matrix": [[1, 0, "5/2", 0], [0, 1, 0, 0]]})
    assert code == 0
    coords = {tuple(k): v for k, v in json.loads(text)["coords"]}
    assert coords[(1, 2)] == "1" and coords[(2, 3)] == "-5/2"
    code, text = run(["eval", "spinor"], {"matrix": [[1, 0, 0, "3"], [0, 1, "-3", 0]]})
    assert code == 0
    assert json.loads(text)["terms"] == [[[], "1"], [[1, 2], "-3"]]


def test_eval_lm():
    code, text = run(["eval", "lm"], {"family": "LG", "x00": 1, "X": [[1, 1], [1, 1]]})
    assert code == 0
    out = json.loads(text)
    assert out["matrix"] == [["1", "0", "1", "1"], ["0", "1", "1", "1"]]
    assert out["round_trip"] is True


def test_eval_base_locus():
    code, text = run(["eval", "lm"], {"x00": 0, "X": [[1, 1], [1, 1]]})
    assert code == 2
    assert json.loads(text)["error"] == "base_locus"


@pytest.mark.parametrize("payload,field", [
    ({"n": 2, "l": 1}, "coords"),
    ({"n": "2", "l": 1, "coords": {}}, "n"),
    ({"n": 2, "l": 1, "coords": {"b": {"2": 1}}}, "coords.a"),
    ({"n": 2, "l": 1, "coords": {"a": {"2": 0.5}, "b": {"2": 1}}}, "coords.a.2"),
    ({"n": 2, "l": 1, "coords": {"q": {}}}, "coords.q"),
    ({"n": 2, "l": 0, "tau": {"plus": "x"}, "coords": {}}, "tau"),
    ({"family": "SP", "n": 2, "l": 0, "coords": {}}, "family"),
])
def test_eval_schema_errors_name_the_field(payload, field):
    code, text = run(["eval", "chart"], payload)
    assert code == 2
    err = json.loads(text)
    assert err["error"] == "schema" and err["field"] == field


@pytest.mark.parametrize("text", ["", "   ", "{not json", "[1, 2]"])
def test_eval_bad_payloads(text, capsys):
    assert run(["eval", "chart"], text)[0] == 2
