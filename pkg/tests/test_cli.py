import json
import os
import subprocess
import sys

import pytest

CMD = [sys.executable, "-m", "nonfree"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CMD + list(args), capture_output=True, text=True, env=env
    )


def test_lattice_command(tmp_path):
    res = run_cli("lattice", "--group", "S3")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["command"] == "lattice"
    assert len(doc["results"]["lattice"]["subgroups"]) == 6


def test_action_command_keys():
    res = run_cli("action", "--group", "S4")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    r = doc["results"]
    assert r["classification"]["totally_nonfree"] is True
    assert r["character"]["axioms_pass"] is True
    assert r["groupoid"]["matrix_coefficients_match_fixed_mass"] is True
    assert r["diagonal_span"]["totally_nonfree"] is True


def test_action_variants():
    for spec in ("regular", "cosets:1", "adjoint", "adjoint:1"):
        res = run_cli("action", "--group", "S3", "--action", spec)
        assert res.returncode == 0, (spec, res.stderr)


def test_measure_command():
    res = run_cli("measure", "--group", "S3", "--measure", "uniform")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    weights = [e["weight"] for e in doc["results"]["ergodic_decomposition"]]
    assert weights == ["1/6", "1/2", "1/6", "1/6"]


def test_thoma_command():
    res = run_cli(
        "thoma",
        "--alpha",
        "1/2,1/2",
        "--cycle-type",
        "2,2",
        "--trials",
        "20000",
        "--seed",
        "5",
    )
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["results"]["exact_fixing_probability"] == "1/4"
    est = doc["results"]["monte_carlo"]["estimate"]
    assert abs(est - 0.25) < 0.02


def test_reruns_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("action", "--group", "D4", "--out", str(a))
    run_cli("action", "--group", "D4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_exit_code_input_error():
    res = run_cli("lattice", "--group", "NOPE")
    assert res.returncode == 1
    assert "unknown group" in res.stderr
    res = run_cli("action", "--group", "S3", "--action", "bogus")
    assert res.returncode == 1
    res = run_cli("nonsense-command")
    assert res.returncode == 1


def test_exit_code_resource_bound():
    res = run_cli("lattice", "--group", "S5", env_extra={"NONFREE_MAX_ORDER": "50"})
    assert res.returncode == 2
    assert "NONFREE_MAX_ORDER" in res.stderr


def test_exit_code_math_precondition(tmp_path):
    # a non-invariant measure file: mass on a single conjugate
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {"weights": [{"subgroup_index": 1, "weight": "1"}]}
        )
    )
    res = run_cli("measure", "--group", "S3", "--measure", f"@{bad}")
    assert res.returncode == 3


def test_group_from_file(tmp_path):
    doc = {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(doc))
    res = run_cli("lattice", "--group", f"@{path}")
    assert res.returncode == 0
    assert len(json.loads(res.stdout)["results"]["lattice"]["subgroups"]) == 6


def test_action_from_file(tmp_path):
    doc = {
        "points": 4,
        "generator_images": [[1, 0, 3, 2]],
    }
    path = tmp_path / "act.json"
    path.write_text(json.dumps(doc))
    res = run_cli("action", "--group", "C2", "--action", f"@{path}")
    assert res.returncode == 0
    cls = json.loads(res.stdout)["results"]["classification"]
    assert cls["free"] is True
