import json
import subprocess
import sys
import time

import numpy as np
import pytest

from pgcurve.cli import run
from pgcurve.io import read_csv, to_csv


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def table(text):
    cols, rows = read_csv(text)
    return {c: np.array([r[i] for r in rows], dtype=float) for i, c in enumerate(cols)}


@pytest.mark.parametrize("args, expected", [
    (("0", "2", "1"), "spacelike"),
    (("1", "0", "0"), "non-isotropic"),
    (("0", "1", "2"), "timelike"),
    (("0", "1", "-1"), "lightlike"),
    (("0", "0", "0"), "zero"),
])
def test_classify(capsys, args, expected):
    code, out, _ = call(capsys, "classify", *args)
    assert (code, out.strip()) == (0, expected)


def test_classify_parse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["classify", "a", "b", "c"])
    assert exc.value.code == 2


def test_synthesize_circular_helix(capsys):
    code, out, _ = call(capsys, "synthesize", "--family", "circular-helix", "--param", "kappa0=1",
                        "--param", "tau0=2", "--character", "timelike", "--range", "0", "1",
                        "--nodes", "101")
    assert code == 0
    t = table(out)
    assert len(t["s"]) == 101
    assert list(t) == ["s", "x", "y", "z", "kappa", "tau", "e1x", "e1y", "e1z", "e2x", "e2y",
                       "e2z", "e3x", "e3y", "e3z", "epsilon"]
    assert np.abs(t["kappa"] - 1).max() <= 1e-4
    assert np.all(t["epsilon"] == 1)


def test_synthesize_general_helix_ratio(capsys):
    code, out, _ = call(capsys, "synthesize", "--family", "general-helix", "--param", "m=-2",
                        "--kappa", "1/s", "--character", "spacelike", "--range", "1", "3")
    assert code == 0
    t = table(out)
    assert np.abs(t["tau"] / t["kappa"] + 2).max() <= 1e-9
    assert np.all(t["epsilon"] == -1)


def test_nodes_validation(capsys):
    code, _, err = call(capsys, "synthesize", "--example", "1", "--nodes", "1")
    assert code == 2 and "nodes" in err


@pytest.mark.parametrize("precision", ["5", "18"])
def test_precision_validation(capsys, precision):
    code, _, _ = call(capsys, "eval", "--example", "1", "--precision", precision)
    assert code == 2


def test_smarandache_example_one(capsys):
    code, out, _ = call(capsys, "smarandache", "--example", "1", "--kind", "e1e2e3",
                        "--range", "0.5", "2", "--nodes", "31")
    assert code == 0
    t = table(out)
    u = t["s"]
    assert np.abs(t["y"] - (-3 + u ** 4) / (4 * u ** 2)).max() <= 1e-9
    assert np.all(t["x"] == 1)


def test_smarandache_rejects_e2e3(capsys):
    code, _, err = call(capsys, "smarandache", "--example", "1", "--kind", "e2e3")
    assert code == 2
    assert "lightlike combination" in err


def test_smarandache_identity_frame_source(capsys, tmp_path):
    # kappa = 1, tau = 0 timelike: frame is the identity at s = 0
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"kappa": "1", "tau": "0", "character": "timelike",
                               "range": [0, 1], "nodes": 5, "kind": "e1e2"}))
    code, out, _ = call(capsys, "smarandache", "--config", str(cfg))
    assert code == 0
    t = table(out)
    assert np.all(t["x"] == 1)
    assert t["y"][0] == 1 and t["z"][0] == 0


def test_missing_kind(capsys):
    assert call(capsys, "smarandache", "--example", "1")[0] == 2


def test_eval_and_frenet_example(capsys):
    code, out, _ = call(capsys, "eval", "--example", "5", "--nodes", "4")
    assert code == 0
    t = table(out)
    assert t["s"][0] == -1 and t["y"][0] == pytest.approx(-1)
    code, out, _ = call(capsys, "frenet", "--example", "5", "--nodes", "4")
    t = table(out)
    np.testing.assert_allclose(t["kappa"], 1 / (2 + t["s"]))
    assert np.all(t["epsilon"] == 1)


def test_eval_and_frenet_natural_source(capsys):
    args = ("--kappa", "exp(-s)", "--tau", "-2", "--character", "spacelike",
            "--range", "-1", "1", "--nodes", "5")
    code, out, _ = call(capsys, "eval", *args)
    assert code == 0 and len(table(out)["s"]) == 5
    code, out, _ = call(capsys, "frenet", *args)
    t = table(out)
    assert code == 0
    np.testing.assert_allclose(t["tau"], -2)


def test_config_curve(capsys, tmp_path):
    cfg = tmp_path / "curve.json"
    cfg.write_text(json.dumps({"curve": {"y": "(2+s)*(-1+ln(2+s))", "z": "0",
                                         "parametrization": "arc-length", "domain": [-1.5, 3]},
                               "range": [-1, 2], "nodes": 7}))
    code, out, _ = call(capsys, "frenet", "--config", str(cfg))
    assert code == 0
    t = table(out)
    np.testing.assert_allclose(t["kappa"], 1 / (2 + t["s"]), atol=1e-6)


def test_config_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call(capsys, "eval", "--config", str(bad))[0] == 2
    assert call(capsys, "eval", "--config", str(tmp_path / "missing.json"))[0] == 2
    assert call(capsys, "synthesize", "--kappa", "1", "--range", "0", "1")[0] == 2
    assert call(capsys, "synthesize", "--kappa", "foo(s)", "--tau", "0",
                "--character", "timelike", "--range", "0", "1")[0] == 2
    assert call(capsys, "synthesize", "--family", "salkowski", "--param", "kappa0=1",
                "--character", "timelike", "--range", "0", "1")[0] == 2
    assert call(capsys, "synthesize", "--family", "circular-helix", "--param", "kappa0",
                "--character", "timelike", "--range", "0", "1")[0] == 2
    assert call(capsys, "eval", "--example", "1", "--range", "2", "1")[0] == 2


def test_invalid_family_parameter_is_usage_error(capsys):
    code = call(capsys, "synthesize", "--family", "general-helix", "--param", "m=0",
                "--kappa", "1/s", "--character", "spacelike", "--range", "1", "3")[0]
    assert code == 2


def test_quadrature_failure_exit_code(capsys):
    code, _, err = call(capsys, "synthesize", "--kappa", "1", "--tau", "1/(s-0.5)",
                        "--character", "timelike", "--range", "0", "1", "--nodes", "4")
    assert code == 3, err


def test_admissibility_failure_exit_code(capsys):
    code, _, err = call(capsys, "synthesize", "--kappa", "s - 0.5", "--tau", "0",
                        "--character", "timelike", "--range", "0", "1", "--nodes", "5")
    assert code == 4, err


def test_lightlike_normal_curve_exit_code(capsys, tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"curve": {"y": "s^2", "z": "s^2", "domain": [-2, 2]},
                               "range": [-1, 1], "nodes": 3}))
    assert call(capsys, "frenet", "--config", str(cfg))[0] == 4


def test_tol_and_env(capsys, monkeypatch):
    base = ("synthesize", "--example", "2", "--nodes", "9")
    monkeypatch.setenv("PGCURVE_QUAD_TOL", "1e-6")
    _, out_env, _ = call(capsys, *base, "--format", "json")
    assert json.loads(out_env)["meta"]["abs_tol"] == 1e-6
    _, out_flag, _ = call(capsys, *base, "--format", "json", "--tol", "1e-8")
    assert json.loads(out_flag)["meta"]["abs_tol"] == 1e-8
    monkeypatch.setenv("PGCURVE_QUAD_TOL", "nonsense")
    assert call(capsys, *base)[0] == 2


def test_deterministic_output(tmp_path, capsys):
    paths = [tmp_path / f"out{i}.csv" for i in range(2)]
    for p in paths:
        code = run(["synthesize", "--example", "3", "--nodes", "51", "--output", str(p)])
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    cols, rows = read_csv(paths[0].read_text())
    assert to_csv(cols, rows) == paths[0].read_text()


def test_json_output(capsys):
    code, out, _ = call(capsys, "eval", "--example", "1", "--nodes", "3", "--format", "json",
                        "--precision", "8")
    doc = json.loads(out)
    assert code == 0
    assert doc["meta"]["tool"] == "pgcurve"
    assert doc["meta"]["source"] == {"example": 1}
    assert len(doc["samples"]) == 3 and set(doc["samples"][0]) == {"s", "x", "y", "z"}


def test_verify_single_example(capsys):
    code, out, _ = call(capsys, "verify", "1")
    assert code == 0
    assert "tau/kappa = -2" in out
    assert "FAIL" not in out


def test_verify_five_reports_discrepancies(capsys):
    code, out, _ = call(capsys, "verify", "5")
    assert code == 0
    section = out.split("discrepancies")[1]
    assert "[5] e1e2 row" in section and "DIFFERS" in section


def test_verify_all_fast(capsys):
    t0 = time.perf_counter()
    code, out, _ = call(capsys, "verify", "all")
    assert code == 0
    assert time.perf_counter() - t0 < 10
    assert "circular helix" in out


def test_verify_json_and_unknown(capsys):
    code, out, _ = call(capsys, "verify", "2", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True
    assert call(capsys, "verify", "9")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from pgcurve.verify import Check, VerifyReport

    monkeypatch.setattr("pgcurve.cli.verify_examples",
                        lambda which: VerifyReport([Check("broken", 0, 1, 1.0, 0.1)]))
    code, out, _ = call(capsys, "verify", "1")
    assert code == 1 and "FAIL" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pgcurve.cli", "classify", "0", "2", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "spacelike"
