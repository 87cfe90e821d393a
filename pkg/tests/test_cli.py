import json
import subprocess
import sys

import pytest

from moadd.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ops(tmp_path):
    f = tmp_path / "ops.txt"
    f.write_text("A\nF\n1\n2\n")
    return str(f)


def test_add_prints_hex_sum(capsys, ops):
    assert call(capsys, "add", "--base", "16", "--in", ops)[1] == "1C\n"
    for eng in ("alg1", "alg2", "parallel", "reconfig"):
        assert call(capsys, "add", "--base", "16", "--in", ops, "--engine", eng)[1] == "1C\n"


def test_add_with_header(capsys, tmp_path):
    f = tmp_path / "wide.txt"
    f.write_text("base=16 width=4\nA234\nFFFF\n0A2D\nFF7F\n")
    assert call(capsys, "add", "--in", str(f), "--engine", "alg2")[1] == "2ABDF\n"


def test_bounds(capsys):
    code, out, _ = call(capsys, "bounds", "-k", "10", "-N", "16", "-M", "4")
    assert code == 0
    head, row = out.splitlines()
    assert dict(zip(head.split(","), row.split(",")))["upper_bound"] == "15"
    assert call(capsys, "bounds", "--base", "10", "--operands", "16", "--width", "4")[1] == out


def test_transition(capsys):
    out = call(capsys, "transition", "-k", "2", "-M", "3", "-p", "4")[1]
    assert out.splitlines()[1] == "3,2,4,19,3,0011"


def test_trace(capsys, ops):
    out = call(capsys, "trace", "--engine", "alg2", "--base", "16", "--in", ops, "--out", "csv")[1]
    lines = out.splitlines()
    assert lines[0] == "clock,column,lut_out,carry_buffer,output_buffer_hex"
    assert [l.split(",")[2] for l in lines[1:5]] == ["2", "3", "1", "2"]
    assert len(lines) == 6


def test_netlist_and_plan(capsys):
    doc = json.loads(call(capsys, "netlist", "--inputs", "4", "--format", "json")[1])
    assert len(doc["gates"]) == 25
    assert call(capsys, "netlist", "--inputs", "4", "--format", "dot")[1].startswith("digraph")
    doc = json.loads(call(capsys, "plan", "--operands", "16", "--width", "16")[1])
    assert [m["id"] for m in doc["modules"]] == [f"U{i}" for i in range(1, 8)]


def test_cost_sweep(capsys):
    out = call(capsys, "cost", "--sweep", "N=2..4", "M=4", "--format", "csv")[1]
    lines = out.splitlines()
    assert lines[0] == "kind,N,M,delay,area"
    assert "CLA,2,4,9,50" in lines and len(lines) == 7


def test_throughput(capsys):
    out = call(capsys, "throughput", "--rt", "17", "--ra", "12,20", "--horizon", "340")[1]
    lines = out.splitlines()
    assert lines[1:3] == ["17,12,17,12,parallel", "17,20,17,20,serial"]
    assert len(lines) == 41


def test_neuron(capsys, tmp_path):
    f = tmp_path / "arn.csv"
    f.write_text("k,x1,x2\n4,2,2\n4,0,0\n4,1,3\n")
    lines = call(capsys, "neuron", "--model", "arn", "--in", str(f))[1].splitlines()
    assert lines[0] == "inputs_hash,raw_sum_hex,y"
    assert [l.split(",")[2] for l in lines[1:]] == ["1", "0", "0.75"]
    g = tmp_path / "mlp.csv"
    g.write_text(",".join(["1.5"] * 16 + ["2"] * 16) + "\n")
    line = call(capsys, "neuron", "--model", "mlp", "--in", str(g))[1].splitlines()[1]
    assert line.split(",")[2] == "48"


def test_repro_to_file(capsys, tmp_path):
    out = tmp_path / "t3.csv"
    assert call(capsys, "repro", "table3", "--output", str(out))[0] == 0
    assert "10000,101,133" in out.read_text()


def test_domain_error_exit_code(capsys):
    code, out, err = call(capsys, "bounds", "-k", "1", "-N", "3", "-M", "2")
    assert code == 1 and out == ""
    assert err.startswith("moadd: error:") and err.count("\n") == 1


def test_missing_file_is_domain_error(capsys, tmp_path):
    assert call(capsys, "add", "--base", "16", "--in", str(tmp_path / "nope"))[0] == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["bounds", "--bogus"])
    assert exc.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "moadd", "repro", "table2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"FEF0" in a
