import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from budgetnet import BudgetProblem, solve_stepwise
from budgetnet.cli import run
from budgetnet.report import trace_table

GOLDEN = Path(__file__).parent / "golden"
TABLES = {110: "levels_A110.txt", 95: "levels_A95.txt", 85: "levels_A85.txt",
          65: "levels_A65.txt", 40: "levels_A40.txt"}


def cli(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("budget", sorted(TABLES))
def test_golden_level_tables(setting, budget):
    rep = solve_stepwise(BudgetProblem(setting["A"], budget), trace=True)
    assert trace_table(rep) == (GOLDEN / TABLES[budget]).read_text()


def test_golden_tables_through_cli(budget=65):
    code, out = cli("solve", "bridge-A", "--budget", str(budget), "--trace")
    assert code == 0
    assert out.split("\n\n", 1)[1] == (GOLDEN / TABLES[budget]).read_text()


def test_solve_bridge_26():
    code, out = cli("solve", "bridge.json", "--budget", "26")
    assert code == 0
    assert out.startswith("X*=(1, 1, 0, 1, 1)  R=0.9220000  C=23\n")


def test_solve_accepts_network_flag_and_algorithms():
    for algo in ("stepwise", "bat", "oracle"):
        code, out = cli("solve", "--network", "bridge", "--budget", "26", "--algorithm", algo)
        assert code == 0 and "R=0.9220000" in out


def test_solve_infeasible_exit_code():
    code, out = cli("solve", "bridge", "--budget", "1")
    assert code == 2 and out.startswith("infeasible")


def test_solve_json_is_deterministic():
    a = cli("solve", "bridge-A", "--budget", "85", "--json", "--trace")[1]
    b = cli("solve", "bridge-A", "--budget", "85", "--json", "--trace")[1]
    assert a == b
    doc = json.loads(a)
    assert doc["result"]["best"] == "11011"
    assert doc["result"]["halt_reason"] == "best-dominates-level"
    assert len(doc["problem"]["network_sha256"]) == 64
    assert doc["levels"][0]["rows"][0]["B"] == "11110"


def test_all_optima_flag():
    code, out = cli("solve", "bridge", "--budget", "14", "--all-optima", "--algorithm", "bat")
    assert code == 0 and out.count("optima:") == 1


def test_reliability_command():
    assert cli("reliability", "bridge.json", "--state", "11011") == (0, "0.9220000\n")
    code, out = cli("reliability", "bridge", "--state", "11011", "--json")
    assert json.loads(out)["reliability"] == pytest.approx(0.922, abs=1e-12)
    assert cli("reliability", "bridge", "--state", "10001")[0] == 2


def test_minpaths_command():
    code, out = cli("minpaths", "bridge")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[1] == "p1 | {a1, a4} | 1-2-4 | 9 | 0.7600000"
    code, out = cli("minpaths", "bridge", "--budget-per-path", "14")
    assert out.count("C(p) > 14") == 2
    paths = json.loads(cli("minpaths", "water", "--json")[1])["paths"]
    assert len(paths) == 27


def test_mp_budget_command(capsys):
    code, out = cli("mp-budget", "bridge.json", "--budget", "14")
    err = capsys.readouterr().err
    assert code == 0
    assert "feasible MPs: p1, p3  R=0.9220000" in out
    assert "total cost 23" in out
    assert "23 > 14" in err
    assert cli("mp-budget", "bridge", "--budget", "8")[0] == 2


def test_bench_csv():
    code, out = cli("bench", "bridge-A", "--budgets", "110,85,40")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert {r["algorithm"] for r in rows} == {"stepwise", "bat"}
    for r in rows:
        assert int(r["vectors_examined"]) <= 32


@pytest.mark.parametrize("argv", [
    ("solve", "bridge", "--budget", "26", "--bogus"),
    ("solve", "bridge"),
    ("frobnicate",),
])
def test_usage_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as info:
        run(list(argv))
    assert info.value.code == 1
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("solve", "missing-file.json", "--budget", "3"),
    ("solve", "bridge", "--budget", "-3"),
    ("reliability", "bridge", "--state", "110"),
    ("reliability", "water", "--state", "1" * 23 + "0"),
    ("solve", "--budget", "3"),
    ("bench", "bridge", "--budgets", "3", "--algorithms", "magic"),
])
def test_runtime_errors_exit_1(argv, capsys):
    code, out = cli(*argv)
    assert code == 1 and out == ""
    assert "error" in capsys.readouterr().err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "budgetnet", "reliability", "bridge",
                           "--state", "10010"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0.7600000\n"
