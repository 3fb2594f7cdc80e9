import csv
import io
import json

import pytest
from click.testing import CliRunner

from qunivalent.cli import cli

STARLIKE_PARAMS = {"m": 0.5, "c_num": [0.5], "b_den": [], "s": 0.0, "c": 0.0}
STARLIKE_CLASS = {"mu": 0.0, "beta": 1.0, "delta": 1.0}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return {
        "params": write("p.json", STARLIKE_PARAMS),
        "class": write("c.json", STARLIKE_CLASS),
        "member": write("f.json", {"N": 2, "a": [0.25]}),
        "nonmember": write("g.json", {"N": 2, "a": [0.75]}),
        "half": write("h.json", {"N": 2, "a": [0.5]}),
        "sa": write("sa.json", {"m": 0.5, "c_num": [0.5], "b_den": [], "s": 1.0, "c": 1.0}),
        "bad_class": write("bad.json", {"mu": 0.0, "beta": 2.0, "delta": 1.0}),
        "broken": write("broken.json", {"N": 3, "a": [0.1]}),
    }


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_classify(files):
    res = run("classify", "--params", files["params"], "--class", files["class"], "--function", files["member"])
    assert res.exit_code == 0
    assert json.loads(res.output) == {"lhs": 1.0, "rhs": 2.0, "margin": 1.0, "member": True}


def test_classify_nonmember(files):
    res = run("classify", "--params", files["params"], "--class", files["class"], "--function", files["nonmember"])
    assert res.exit_code == 0 and json.loads(res.output)["member"] is False


def test_weights_csv(files):
    res = run("weights", "--params", files["sa"], "--n", "3")
    rows = list(csv.reader(io.StringIO(res.output)))
    assert rows[0] == ["n", "lambda"]
    assert [int(r[0]) for r in rows[1:]] == [2, 3]
    assert float(rows[1][1]) == pytest.approx(2 / 3, rel=1e-15)


def test_extremal(files):
    res = run("extremal", "--params", files["params"], "--class", files["class"], "--n", "3")
    assert json.loads(res.output) == {"N": 3, "a": [0.0, 1 / 3]}
    assert run("extremal", "--params", files["params"], "--class", files["class"], "--n", "1").exit_code == 2


def test_distortion(files):
    res = run("distortion", "--params", files["params"], "--class", files["class"], "--r", "0.5")
    assert json.loads(res.output) == {"r": 0.5, "value_lo": 0.375, "value_hi": 0.625, "deriv_lo": 0.5, "deriv_hi": 1.5}
    sweep = run("distortion", "--params", files["params"], "--class", files["class"], "--sweep")
    rows = list(csv.reader(io.StringIO(sweep.output)))
    assert rows[0] == ["r", "value_lo", "value_hi", "deriv_lo", "deriv_hi"] and len(rows) == 20
    assert run("distortion", "--params", files["params"], "--class", files["class"]).exit_code == 2
    stated = run("distortion", "--params", files["sa"], "--class", files["class"], "--r", "0.5", "--as-stated")
    assert stated.exit_code == 0


def test_neighborhood(files):
    res = run("neighborhood", "--params", files["params"], "--class", files["class"],
              "--f", files["member"], "--g", files["half"])
    out = json.loads(res.output)
    assert out["theorem6_gamma"] == 1.0 and out["distance"] == 0.5 and out["theorem7_zeta"] == 0.5
    only = run("neighborhood", "--params", files["params"], "--class", files["class"], "--gamma", "0")
    assert json.loads(only.output)["theorem7_zeta"] == 1.0
    assert run("neighborhood", "--params", files["params"], "--class", files["class"], "--f", files["member"]).exit_code == 2


def test_hadamard(files):
    res = run("hadamard", "--params", files["params"], "--class", files["class"], "--f", files["half"], "--g", files["half"])
    out = json.loads(res.output)
    assert out["product"] == {"N": 2, "a": [0.25]}
    assert out["mu2_terms"][0] == pytest.approx(2 / 3)
    assert out["mu2_formula"] == out["mu2_oracle"] < 0.5


def test_integral(files):
    res = run("integral", "--kind", "bernardi", "--q", "1", "--function", files["half"])
    assert json.loads(res.output)["a"][0] == pytest.approx(1 / 3, rel=1e-15)
    res = run("integral", "--kind", "alpha", "--alpha", "0", "--function", files["half"])
    assert json.loads(res.output) == {"N": 2, "a": [0.0]}
    assert run("integral", "--kind", "alpha", "--function", files["half"]).exit_code == 2
    assert run("integral", "--kind", "bernardi", "--q", "-2", "--function", files["half"]).exit_code == 2


def test_verify_consistent(files):
    res = run("verify", "--params", files["params"], "--class", files["class"], "--function", files["member"])
    out = json.loads(res.output)
    assert res.exit_code == 0 and out["verdict"] == "CONSISTENT" and out["satisfied"]


def test_verify_inconsistent_exit_code(files):
    res = run("verify", "--params", files["params"], "--class", files["class"], "--function", files["nonmember"],
              "--radii", "0.1", "--angles", "8", "--slack-factor", "0")
    assert res.exit_code == 1
    assert json.loads(res.output)["verdict"] == "INCONSISTENT"


def test_verify_workers_match_serial(files):
    base = ["verify", "--params", files["params"], "--class", files["class"], "--function", files["nonmember"]]
    assert run(*base).output == run(*base, "--workers", "4").output


def test_selfcheck():
    res = run("selfcheck", "--seed", "3", "--count", "10")
    assert res.exit_code == 0 and json.loads(res.output)["failures"] == []


def test_errors_go_to_stderr(files):
    res = CliRunner().invoke(cli, ["classify", "--params", files["params"], "--class", files["bad_class"],
                                   "--function", files["member"]])
    assert res.exit_code == 2 and "beta" in res.output
    res = run("classify", "--params", files["params"], "--class", files["class"], "--function", files["broken"])
    assert res.exit_code == 2
