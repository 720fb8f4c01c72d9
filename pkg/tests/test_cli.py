"""Command-line interface: subcommands, formats, exit codes, determinism."""

import json
import subprocess
import sys

from lambdapack.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_REFUTED,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_atlas_lists_named_graphs(capsys):
    code, out, _ = run_cli(capsys, "atlas")
    assert code == EXIT_OK
    assert "Q" in out and "vertices=  8" in out


def test_atlas_json(capsys):
    code, out, _ = run_cli(capsys, "atlas", "--format", "json")
    rows = json.loads(out)
    assert {"name": "Q", "vertices": 8, "edges": 12} in rows


def test_build_expr_json(capsys):
    code, out, _ = run_cli(capsys, "build", "--expr", "atlas(Q)")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["n"] == 8


def test_build_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "build", "--expr", "vsub(Q")
    assert code == EXIT_PARSE
    assert "column" in err


def test_check_cube(capsys):
    code, out, _ = run_cli(capsys, "check", "--expr", "atlas(Q)")
    assert code == EXIT_OK
    assert "cubic: True" in out
    assert "bipartite: True" in out
    assert "planar: True" in out
    assert "3-connected: True" in out


def test_solve_max_on_k4(capsys):
    code, out, _ = run_cli(capsys, "solve", "--expr", "atlas(K4)", "--max")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "OPTIMUM" and data["value"] == 1


def test_solve_factor_with_flags(capsys):
    code, out, _ = run_cli(
        capsys,
        "solve",
        "--expr", "ebridge(Q@e1, Q@e1)",
        "--factor",
        "--force-edge", "z1-z2",
    )
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "UNSAT"


def test_solve_precondition_exit(capsys):
    # FACTOR on 4 vertices: residue violation
    code, _, err = run_cli(capsys, "solve", "--expr", "atlas(K4)", "--factor")
    assert code == EXIT_PRECONDITION


def test_missing_script_is_parse_error(capsys):
    code, out, _ = run_cli(capsys, "solve", "--script", "no-such-file", "--max")
    assert code == EXIT_PARSE


def test_solve_budget_indeterminate(tmp_path, capsys):
    script = tmp_path / "n.lp"
    script.write_text(
        "let K = ebridge(atlas(Q)@000-001, atlas(Q)@000-001)\n"
        "let R = ymerge(K@z1[z2,A.000,B.000])\n"
    )
    code, out, _ = run_cli(
        capsys,
        "solve", "--script", str(script), "--name", "R", "--max",
        "--budget-nodes", "20",
    )
    assert code == EXIT_BUDGET
    assert json.loads(out)["verdict"] == "INDETERMINATE"


def test_solve_output_is_deterministic(capsys):
    args = ("solve", "--expr", "atlas(S)", "--max")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_certify_and_check_cert(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code, _, err = run_cli(capsys, "certify", "--output", str(cert_path))
    assert code == EXIT_OK
    assert "verified: no_factor on N (n=72)" in err
    data = json.loads(cert_path.read_text())
    assert data["format"] == "lambdapack-certificate/1"

    code, _, err = run_cli(capsys, "check-cert", str(cert_path))
    assert code == EXIT_OK
    assert "certificate valid" in err

    # tampering flips the exit code to refuted
    data["finalFacts"][-1]["graph"] = "0" * 64
    cert_path.write_text(json.dumps(data))
    code, _, _ = run_cli(capsys, "check-cert", str(cert_path))
    assert code == EXIT_REFUTED


def test_certify_custom_pipeline(tmp_path, capsys):
    script = tmp_path / "pipe.lp"
    script.write_text("let K = ebridge(atlas(Q)@000-001, atlas(Q)@000-001)\n")
    code, out, _ = run_cli(capsys, "certify", "--pipeline", str(script))
    assert code == EXIT_OK
    data = json.loads(out)
    assert [s["rule"] for s in data["steps"]] == ["R1", "BASE"]


def test_sample_bound(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "-n", "8", "--count", "5", "--seed", "7", "--test-bound"
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["violations"] == 0
    assert all(row["satisfied"] for row in data["samples"])


def test_sample_fifty_of_fifty_meet_the_bound(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "-n", "16", "--count", "50", "--seed", "7", "--test-bound"
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["violations"] == 0
    assert sum(1 for row in data["samples"] if row["satisfied"]) == 50
    assert all(row["bound"] == 4 for row in data["samples"])


def test_sample_seed_determinism(capsys):
    args = ("sample", "-n", "10", "--count", "3", "--seed", "1")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_export_round_trip(tmp_path, capsys):
    json_path = tmp_path / "g.json"
    dot_path = tmp_path / "g.dot"
    run_cli(capsys, "build", "--expr", "atlas(S)", "--output", str(json_path))
    code, _, _ = run_cli(
        capsys, "export", "--input", str(json_path), "--to", "dot",
        "--output", str(dot_path),
    )
    assert code == EXIT_OK
    code, out, _ = run_cli(capsys, "export", "--input", str(dot_path), "--to", "json")
    assert code == EXIT_OK
    assert json.loads(out) == json.loads(json_path.read_text())


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lambdapack.cli", "atlas"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "K4" in proc.stdout
