import json
import math

import numpy as np
import pytest

from finslerboost.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_boost_standard_matrix(capsys):
    code, out, _ = run(
        capsys, "boost", "--nu", "0,0,1", "--r", "0", "--n", "0,0,1", "--alpha", "1"
    )
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["matrix", "params", "velocity", "dilation"]
    m = np.array(doc["matrix"]).reshape(4, 4)
    assert m[0, 0] == pytest.approx(math.cosh(1.0), rel=1e-12)
    assert m[0, 3] == pytest.approx(-math.sinh(1.0), rel=1e-12)
    assert doc["velocity"][2] == pytest.approx(math.tanh(1.0), rel=1e-12)
    assert doc["dilation"] == pytest.approx(1.0)


def test_boost_rest_frame_identity(capsys):
    code, out, _ = run(capsys, "boost", "--nu", "0,0,1", "--r", "0.2", "--v", "0,0,0")
    assert code == 0
    doc = json.loads(out)
    assert np.allclose(np.array(doc["matrix"]).reshape(4, 4), np.eye(4))
    assert doc["dilation"] == 1.0


def test_boost_dilation_report(capsys):
    code, out, _ = run(capsys, "boost", "--nu", "0,0,1", "--r", "1", "--v", "0.6,0,0")
    assert code == 0
    assert json.loads(out)["dilation"] == pytest.approx(1.25, rel=1e-14)


def test_boost_transforms_event(capsys):
    code, out, _ = run(
        capsys, "boost", "--nu", "0,0,1", "--r", "0", "--n", "0,0,1",
        "--alpha", "1", "--x", "1,0,0,0",
    )
    doc = json.loads(out)
    assert doc["x_prime"][0] == pytest.approx(math.cosh(1.0), rel=1e-12)
    assert doc["x_prime"][3] == pytest.approx(-math.sinh(1.0), rel=1e-12)


def test_compose_identity_and_parallel(capsys):
    code, out, _ = run(
        capsys, "compose", "--nu", "0,0,1",
        "--n1", "1,0,0", "--alpha1", "0.8", "--n2", "0,0,1", "--alpha2", "0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["alpha"] == pytest.approx(0.8, abs=1e-12)
    assert doc["residual"] < 1e-10

    code, out, _ = run(
        capsys, "compose", "--nu", "0,0,1",
        "--n1", "0,0,1", "--alpha1", "0.5", "--n2", "0,0,1", "--alpha2", "0.5",
    )
    doc = json.loads(out)
    assert doc["params"]["alpha"] == pytest.approx(1.0, abs=1e-12)
    assert doc["residual"] < 1e-10


def test_invariants_trivial_event(capsys):
    code, out, _ = run(
        capsys, "invariants", "--nu", "0,0,1", "--r", "0.3", "--x", "1,0,0,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["minkowski_interval"] == 1.0
    assert doc["finsler_interval_sq"] == pytest.approx(1.0)
    assert doc["axial_invariants"] == {
        "nu_projection": 1.0,
        "interval_sq": 1.0,
        "cylinder_ratio": 0.0,
    }


def test_invariants_horosphere_velocity(capsys):
    code, out, _ = run(
        capsys, "invariants", "--nu", "0,0,1", "--r", "0.3",
        "--v", f"{2/3},0,{1/3}",
    )
    assert code == 0
    assert json.loads(out)["horosphere_level"] == pytest.approx(1.0, abs=1e-12)


def test_invariants_spacelike_event_surfaces_error(capsys):
    code, out, _ = run(
        capsys, "invariants", "--nu", "0,0,1", "--r", "0.3", "--x", "1,2,0,0"
    )
    assert code == 2
    doc = json.loads(out)
    assert doc["axial_invariants"]["error"] == "NonTimelike"
    assert doc["finsler_interval_sq"]["error"] == "SpacelikeInput"


def test_spinor_rest_frame(capsys):
    code, out, _ = run(
        capsys, "spinor", "--nu", "0,0,1", "--r", "0.4", "--v", "0,0,0",
        "--psi", "1,0,0,0,0,0,0,0",
    )
    assert code == 0
    doc = json.loads(out)
    got = np.array([complex(re, im) for re, im in doc["psi_prime"]])
    assert np.max(np.abs(got - np.array([1, 0, 0, 0]))) < 1e-12
    assert doc["dilation"] == 1.0


def test_check_pass_and_vacuous(capsys):
    code, out, _ = run(
        capsys, "check", "--suite", "closure", "--samples", "100", "--seed", "42"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["suites"][0]["max_deviation"] < 1e-10

    code, out, _ = run(capsys, "check", "--samples", "0", "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert all(s["vacuous"] for s in doc["suites"])


def test_check_determinism(capsys):
    _, first, _ = run(capsys, "check", "--suite", "metric", "--samples", "50", "--seed", "9")
    _, second, _ = run(capsys, "check", "--suite", "metric", "--samples", "50", "--seed", "9")
    assert first == second


def test_surface_export(tmp_path, capsys):
    out_csv = tmp_path / "h.csv"
    code, out, _ = run(
        capsys, "surface", "--nu", "0,0,1", "--family", "horosphere",
        "--level", "1", "--resolution", "8x8", "--output", str(out_csv),
    )
    assert code == 0
    assert json.loads(out)["points"] == 64
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "vx,vy,vz,level"
    assert len(lines) == 65

    out_json = tmp_path / "c.json"
    code, out, err = run(
        capsys, "surface", "--nu", "0,0,1", "--family", "cylinder",
        "--level", "0", "--resolution", "5x5", "--output", str(out_json),
        "--format", "json",
    )
    assert code == 0
    assert "degenerates" in err
    doc = json.loads(out_json.read_text())
    assert doc["family"] == "cylinder"
    assert len(doc["points"]) == 5


def test_surface_out_of_range(tmp_path, capsys):
    code, _, err = run(
        capsys, "surface", "--nu", "0,0,1", "--family", "horosphere",
        "--level", "-1", "--resolution", "4x4", "--output", str(tmp_path / "x.csv"),
    )
    assert code == 2
    assert "OutOfRange" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "boost", "--nu", "0,0,1", "--r", "0")
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main(["surface", "--nu", "0,0,1", "--family", "horosphere", "--level", "1",
              "--output", "/tmp/x", "--format", "xml"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["boost", "--nu", "1,2", "--r", "0", "--alpha", "1", "--n", "0,0,1"])
    assert exc.value.code == 1


def test_tol_env_override(capsys, monkeypatch):
    monkeypatch.setenv("FINSLER_TOL", "1e-6")
    code, out, _ = run(capsys, "boost", "--nu", "0,0,1", "--r", "0", "--v", "0,0,0.5")
    assert code == 0
