"""CLI surface: subcommands, formats, exit codes, determinism."""

import json

import numpy as np
import pytest

from cosetpdo.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_groups_list(capsys):
    code, out, _ = run_cli(capsys, "groups", "list")
    assert code == 0
    for name in ("S3", "S4", "Q8", "Z12", "D4"):
        assert name in out


def test_groups_show(capsys):
    code, out, _ = run_cli(capsys, "groups", "show", "S3")
    assert code == 0
    assert "order 6" in out
    assert out.count("\ntrivial") + out.count("\nsign") + out.count("\nstd") == 3


def test_groups_show_unknown_exit_2(capsys):
    code, _, err = run_cli(capsys, "groups", "show", "NOPE")
    assert code == 2
    assert "unknown group" in err


def test_groups_load(tmp_path, capsys):
    doc = {"name": "K", "order": 2, "cayley": [[0, 1], [1, 0]]}
    path = tmp_path / "k.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "groups", "load", str(path))
    assert code == 0 and "ok: group K" in out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "B", "order": 2, "cayley": [[0, 0], [1, 1]]}))
    code, _, err = run_cli(capsys, "groups", "load", str(bad))
    assert code == 2 and "Latin" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "S3", "--subgroup", "Z2a",
                           "--suite", "all")
    assert code == 0
    assert out.count(" pass") >= 20
    code, _, err = run_cli(capsys, "verify", "--group", "S3", "--subgroup", "Z2a",
                           "--tol", "1e-30")
    assert code == 1
    assert "worst offender" in err


def test_verify_json_deterministic(capsys):
    args = ("verify", "--group", "Q8", "--subgroup", "Z4i",
            "--suite", "schatten", "--seed", "9", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    body = json.loads(out1)
    assert body["passed"] is True


def test_heat_trace_csv(capsys):
    code, out, _ = run_cli(capsys, "heat-trace", "--group", "S3",
                           "--subgroup", "Z2a", "--tmin", "0", "--tmax", "2",
                           "--steps", "9")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,trace_formula,trace_oracle,residual"
    assert len(lines) == 10
    first = lines[1].split(",")
    assert float(first[1]) == 3.0


def test_heat_trace_deterministic(capsys):
    args = ("heat-trace", "--group", "D4", "--subgroup", "Z2r", "--steps", "5")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_trace_random_seed(capsys):
    code, out, _ = run_cli(capsys, "trace", "--group", "S3", "--subgroup", "Z2a",
                           "--random", "--seed", "7")
    assert code == 0
    assert "kernel diagonal" in out and "eigenvalue sum" in out
    # residuals printed small
    assert "residual symbol" in out


def test_schatten_report(capsys):
    code, out, _ = run_cli(capsys, "schatten", "--group", "S3", "--subgroup", "Z2a",
                           "--r", "0.5", "--random", "--seed", "3",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["residual"] < 1e-9


def test_nuclearity_report(capsys):
    code, out, _ = run_cli(capsys, "nuclearity", "--group", "S4", "--subgroup", "S3",
                           "--r", "0.5", "--p1", "1", "--p2", "2",
                           "--random", "--seed", "2", "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["functional"] > 0 and body["cost"] > 0


def test_symbol_dump(capsys):
    code, out, _ = run_cli(capsys, "symbol", "dump", "--group", "S3",
                           "--subgroup", "Z2a", "--random", "--seed", "1",
                           "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert [c["label"] for c in body["classes"]] == ["trivial", "std"]
    assert body["consistency_residual"] < 1e-11


def test_kernel_file_flow(tmp_path, capsys):
    n = 3
    kernel = [[[float(n if i == j else 0), 0.0] for j in range(n)] for i in range(n)]
    path = tmp_path / "kernel.json"
    path.write_text(json.dumps({"size": n, "kernel": kernel}))
    code, out, _ = run_cli(capsys, "trace", "--group", "S3", "--subgroup", "Z2a",
                           "--kernel", str(path), "--format", "json")
    assert code == 0
    assert abs(json.loads(out)["trace_kernel"][0] - 3.0) < 1e-12


def test_malformed_kernel_file_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "trace", "--group", "S3", "--subgroup", "Z2a",
                           "--kernel", str(path))
    assert code == 2
    path.write_text(json.dumps({"size": 2, "kernel": [[[1.0, 0.0]]]}))
    code, _, err = run_cli(capsys, "trace", "--group", "S3", "--subgroup", "Z2a",
                           "--kernel", str(path))
    assert code == 2


def test_transform_pipe(tmp_path, capsys, monkeypatch):
    values = [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
    fin = tmp_path / "f.json"
    fin.write_text(json.dumps({"values": values}))
    code, out, _ = run_cli(capsys, "transform", "forward", "--group", "S3",
                           "--subgroup", "Z2a", "--input", str(fin))
    assert code == 0
    doc = json.loads(out)
    cin = tmp_path / "c.json"
    cin.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "transform", "inverse", "--group", "S3",
                           "--subgroup", "Z2a", "--input", str(cin))
    assert code == 0
    back = np.array([complex(re, im) for re, im in json.loads(out)["values"]])
    assert np.abs(back - np.array([1.0, 0.0, 0.0])).max() < 1e-11


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--group", "S3"])    # missing --subgroup
    assert exc.value.code == 2


def test_operator_requires_source(capsys):
    code, _, err = run_cli(capsys, "trace", "--group", "S3", "--subgroup", "Z2a")
    assert code == 2
    assert "--kernel" in err or "--random" in err
