"""CLI surface tests: syntax, outputs, exit codes, reproducibility."""

import json
import subprocess
import sys


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "jzero.cli", *args],
        capture_output=True,
        text=True,
    )


def test_invariants_command():
    out = run_cli("invariants", "1,0,-6,0,1")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert (doc["I"], doc["J"], doc["disc"]) == (48, 0, 16384)
    assert doc["hessian_divisor"] == [1, 0, 1]
    assert "config_hash" in doc and "seed" in doc and doc["version"]


def test_reduce_command():
    out = run_cli("reduce", "3,2,2")
    doc = json.loads(out.stdout)
    assert doc["reduced"] == [2, 2, 3]


def test_classgroup_command():
    out = run_cli("classgroup", "23")
    doc = json.loads(out.stdout)
    assert doc["h2"] == 3
    assert len(doc["composition"]) == 9


def test_family_command(tmp_path):
    csv_path = tmp_path / "fam.csv"
    out = run_cli("family", "1,0,1", "--ibound", "100", "--csv", str(csv_path))
    doc = json.loads(out.stdout)
    assert doc["points"] == 28
    rows = csv_path.read_text().splitlines()
    assert rows[0].startswith("A,B,a4")
    assert len(rows) == 29


def test_bad_form_syntax_exit_code():
    out = run_cli("invariants", "1,2,3")
    assert out.returncode == 2
    out = run_cli("invariants", "a,b,c,d,e")
    assert out.returncode == 2
    out = run_cli("count-n", "--ladder", "100,50")
    assert out.returncode == 2


def test_verify_exit_codes():
    out = run_cli("verify", "identities", "--trials", "200")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["passed"] is True


def test_count_n_reproducible(tmp_path):
    a = run_cli("count-n", "--ladder", "100000,1000000", "--csv", str(tmp_path / "a.csv"))
    b = run_cli("count-n", "--ladder", "100000,1000000", "--csv", str(tmp_path / "b.csv"))
    da, db = json.loads(a.stdout), json.loads(b.stdout)
    da.pop("timestamp"), db.pop("timestamp")
    # csv paths differ in the config; counts and hash-relevant payload match
    da["config"].pop("csv"), db["config"].pop("csv")
    da.pop("config_hash"), db.pop("config_hash")
    assert da == db
    assert (tmp_path / "a.csv").read_text() == (tmp_path / "b.csv").read_text()


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("threads = 2\nseed = 7\n")
    out = run_cli("--config", str(cfg), "invariants", "0,1,0,-1,0")
    doc = json.loads(out.stdout)
    assert doc["config"]["threads"] == "2"
    assert doc["seed"] == 7
