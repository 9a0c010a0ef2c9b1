from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from lambdapack.cli import main
from lambdapack.families import gen_Q
from lambdapack.graph import Graph
from lambdapack.graph6 import emit_graph6, parse_graph6

from conftest import CUBIC
from test_harness import _false_theorem


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_generate_net_then_analyze(cli):
    code, out, _ = cli(["generate", "--family", "net"])
    assert code == 0
    code, rep, _ = cli(["analyze"], out)
    assert code == 0
    lines = dict(line.split("=", 1) for line in rep.splitlines())
    assert lines["eb"] == "3" and lines["claw_free"] == "true" and lines["connectivity"] == "1"
    assert lines["class_A"] == "true"


def test_analyze_json(cli):
    code, out, _ = cli(["analyze", "--json", emit_graph6(Graph.complete(4))])
    rep = json.loads(out)
    assert code == 0 and rep["connectivity"] == 3 and rep["cubic"] and rep["eb"] == 0


def test_q_requires_named_edge(cli):
    _, g6, _ = cli(["generate", "--family", "Q", "--la", "5", "--lb", "5"])
    assert g6.startswith("# family=Q")
    code, out, _ = cli(["solve", "--require-edge", "z1,z2"], g6)
    assert code == 0 and out.splitlines()[0] == "no factor"


def test_solve_c6(cli):
    code, out, _ = cli(["solve", emit_graph6(Graph.cycle(6))])
    lines = out.splitlines()
    assert code == 0 and lines[:2] == ["factor", "size 2"] and len(lines) == 4


def test_solve_constraints(cli):
    c6 = emit_graph6(Graph.cycle(6))
    code, out, _ = cli(["solve", c6, "--require-path", "0,1,2", "--forbid-edge", "3,4"])
    assert code == 0 and out.splitlines()[:3] == ["no factor", "size 1", "0-1-2"]
    code, out, _ = cli(["solve", c6, "--delete-vertex", "0", "--delete-vertex", "3"])
    assert out.splitlines()[0] == "no factor"


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["solve", "D?|"], ""),
        (["solve"], ""),
        (["solve", "EhEG", "--require-edge", "0,3"], ""),
        (["solve", "EhEG", "--require-path", "0,1,0"], ""),
        (["solve", "E{Sw", "--require-edge", "zz,1"], ""),
        (["solve", "E{Sw", "--require-path", "0,1"], ""),
        (["verify", "--theorem", "T9_9"], ""),
        (["verify", "--filter", "bogus"], ""),
        (["verify", "--jobs", "0"], ""),
        (["verify", "--budget", "0"], ""),
        (["verify", "--generator", "nope"], ""),
        (["verify", "--corpus", "/no/such/file"], ""),
        (["generate", "--family", "R"], ""),
        (["generate", "--family", "blowup"], ""),
        (["generate", "--family", "blowup", "--base", "C]"], ""),
    ],
)
def test_usage_errors_exit_2(cli, argv, stdin):
    code, _, err = cli(argv, stdin)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(cli):
    with pytest.raises(SystemExit) as info:
        cli(["generate", "--family", "petersen"])
    assert info.value.code == 2


def test_budget_flag_beats_env(cli, monkeypatch):
    monkeypatch.setenv("LAMBDAPACK_BUDGET", "1")
    code, out, _ = cli(["verify", "--generator", "classA:3", "--theorem", "T2_9"])
    assert json.loads(out)["outcome"] == "RESOURCE_EXHAUSTED" and code == 0
    code, out, _ = cli(["verify", "--generator", "classA:3", "--theorem", "T2_9", "--budget", "1000"])
    assert json.loads(out)["outcome"] == "HOLDS"


def test_verify_stream_and_summary(cli):
    code, out, err = cli(["verify", "--corpus", str(CUBIC), "--theorem", "B1_1", "--filter", "n<=8"])
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(recs) == 1 + 2 + 5
    assert {r["outcome"] for r in recs} == {"HOLDS"}
    assert "HOLDS=8" in err and "COUNTEREXAMPLE=0" in err


def test_verify_counterexample_exit_1_and_replay(cli, monkeypatch, tmp_path):
    _false_theorem(monkeypatch)
    code, out, _ = cli(["verify", "--generator", "net", "--theorem", "FAKE"])
    assert code == 1
    p = tmp_path / "v.jsonl"
    p.write_text(out)
    code, out, _ = cli(["replay", str(p)])
    assert code == 1 and "reproduced" in out


def test_generate_blowup(cli):
    code, out, _ = cli(["generate", "--family", "blowup", "--base", "C~", "--plain"])
    assert code == 0 and parse_graph6(out.strip()).n == 12


def test_installed_script_end_to_end():
    q = subprocess.run(
        [sys.executable, "-m", "lambdapack", "generate", "--family", "Q", "--la", "5", "--lb", "5"],
        capture_output=True, text=True, check=True,
    ).stdout
    solved = subprocess.run(
        [sys.executable, "-m", "lambdapack", "solve", "--require-edge", "z1,z2"],
        input=q, capture_output=True, text=True,
    )
    assert solved.returncode == 0 and solved.stdout.startswith("no factor")
    assert parse_graph6(q.splitlines()[1]) == gen_Q(5, 5)[0]
