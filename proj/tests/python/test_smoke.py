import json
import math
import os
import pathlib
import subprocess

import jsonschema
import pytest

import wcolab

SCHEMA_DIR = pathlib.Path(os.environ.get("WCOLAB_SCHEMA_DIR", pathlib.Path(__file__).parents[2] / "schema"))
FAST = wcolab.GridConfig(128, 32)


@pytest.fixture(scope="module")
def validator():
    schema = json.loads((SCHEMA_DIR / "wcolab-output.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def test_expr_jet_and_text():
    f = wcolab.Expr("poly(1,2,3)")
    assert f(0.5j) == pytest.approx(complex(0.25, 1.0))
    val, d1, d2 = f.jet(0.5j)
    assert d1 == pytest.approx(complex(2.0, 3.0))
    assert d2 == pytest.approx(6.0)
    assert wcolab.Expr(str(f))(0.3) == pytest.approx(f(0.3))
    with pytest.raises(wcolab.ParseError):
        wcolab.Expr("poly(1,")


def test_norms():
    assert wcolab.norm("bloch:1", "poly(0,1)")["total"] == pytest.approx(1.0, abs=1e-9)
    assert wcolab.norm("bergman:2,0", "poly(0,0,1)")["total"] == pytest.approx(1 / math.sqrt(3), abs=1e-9)
    assert wcolab.seminorm("b1", "poly(0,0,1)", wcolab.GridConfig()) == pytest.approx(2.0, abs=1e-9)
    assert wcolab.normalize_space("bloch:1.0") == "bloch:1"
    with pytest.raises(wcolab.Error):
        wcolab.norm("hardy:2", "recip(poly(0.5,1))")


def test_zero_count():
    assert wcolab.count_zeros("poly(-0.25,0,1)", 0.9, wcolab.GridConfig()) == 2


def test_invertibility_and_isometry():
    rep = wcolab.check_invertible("bloch:1", "poly(2,1)", "mobius(0.5,0,0)")
    assert rep["verdict"] == "Invertible"
    assert rep["roundtrip_residual"] < 1e-9
    assert wcolab.check_invertible("bloch:1", "poly(0,1)", "mobius(0.5,0,0)")["verdict"] == "NotInvertible"
    iso = wcolab.check_isometry("bloch:1", "const(0,1)", "mobius(0,0,2)")
    assert iso["surjective_isometry"]
    assert not wcolab.check_isometry("bloch:1", "const(1,0)", "mobius(0.3,0,0)")["surjective_isometry"]


def test_axioms_small_grid():
    reps = wcolab.axioms("bloch:1", FAST)
    assert [r["axiom"] for r in reps] == ["A1", "A2", "A3", "A4", "A5", "A6"]
    assert all(r["passed"] for r in reps)


CLI_CASES = [
    ["norm", "--space", "bloch:2", "--fn", "poly(1,1,1)"],
    ["seminorm", "--space", "bmoa", "--fn", "poly(0,1)", "--ntheta", "128", "--nradial", "32"],
    ["check-invertible", "--space", "hardy:2", "--F", "poly(2,1)", "--phi", "mobius(0.5,0,0)"],
    ["check-invertible", "--space", "bloch:1", "--F", "poly(2,1)", "--phi", "poly(0,0.5)"],
    ["check-isometry", "--space", "bloch:1", "--F", "const(1,0)", "--phi", "mobius(0.3,0,0)"],
    ["invert", "--F", "poly(2,1)", "--phi", "mobius(0.5,0,0)"],
    ["axioms", "--space", "hardy:2", "--ntheta", "128", "--nradial", "32"],
    ["section", "--F", "poly(2,1)", "--phi", "mobius(0.5,0,0)", "--N", "4"],
]


@pytest.mark.parametrize("args", CLI_CASES, ids=[c[0] for c in CLI_CASES])
def test_cli_json_matches_schema(args, validator):
    cli = os.environ.get("WCOLAB_CLI")
    if not cli:
        pytest.skip("WCOLAB_CLI not set")
    proc = subprocess.run([cli, *args], capture_output=True, text=True, timeout=120)
    assert proc.returncode in (0, 1, 2), proc.stderr
    doc = json.loads(proc.stdout)
    validator.validate(doc)
    assert doc["command"] == args[0]
