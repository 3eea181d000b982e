import io
import json
import subprocess
import sys

import pytest

from implicol import cycle_graph, emit_dimacs, parse_dimacs
from implicol.cli import main
from implicol.fixtures import FIG1A, FIGURES, FOUR_PATH


def run(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_relations_on_fig1a(monkeypatch):
    code, out = run(["relations", "-k", "3"], emit_dimacs(FIG1A.graph), monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert {"u": 1, "v": 4, "status": "non-drawn-implicit-edge"} in data["pairs"]
    assert data["explicitEdgesAdded"] == [[1, 4]]


def test_relations_single_pair_and_text(monkeypatch):
    code, out = run(["relations", "-k", "3", "--pair", "1", "4"], emit_dimacs(FIG1A.graph), monkeypatch)
    assert code == 0 and json.loads(out)["pair"]["status"] == "non-drawn-implicit-edge"
    code, out = run(["relations", "-k", "3", "--format", "text"], emit_dimacs(FIG1A.graph), monkeypatch)
    assert "1 4: non-drawn-implicit-edge" in out
    code, out = run(["relations", "-k", "3", "--format", "dot"], emit_dimacs(FIG1A.graph), monkeypatch)
    assert "style=dashed" in out


def test_explicit_four_path_is_square(monkeypatch):
    code, out = run(["explicit", "-k", "2"], emit_dimacs(FOUR_PATH.graph), monkeypatch)
    assert code == 0
    assert parse_dimacs(out) == cycle_graph(4)


def test_verify_small(monkeypatch):
    code, out = run(["verify", "--max-n", "4"], "", monkeypatch)
    assert code == 0
    report = json.loads(out)
    assert {r["status"] for r in report} == {"confirmed"}
    assert all(set(r) == {"theorem", "anchor", "checked", "status", "counterexamples"} for r in report)


def test_verify_incomplete_exits_one(monkeypatch):
    code, out = run(["verify", "--theorem", "poly-evaluation", "--time-budget", "0"], "", monkeypatch)
    assert code == 1 and json.loads(out)[0]["status"] == "incomplete"


def test_unknown_theorem_is_refused(monkeypatch, capsys):
    code, out = run(["verify", "--theorem", "bogus"], "", monkeypatch)
    assert code == 1 and out == ""
    assert "unknown theorem" in capsys.readouterr().err


def test_parse_error_exit_two(monkeypatch, capsys):
    code, out = run(["chromatic"], "p edge 2 1\ne 1 5\n", monkeypatch)
    assert code == 2 and out == ""
    assert "line 2" in capsys.readouterr().err


def test_missing_k_exit_one(monkeypatch, capsys):
    code, out = run(["relations"], emit_dimacs(FIG1A.graph), monkeypatch)
    assert code == 1 and out == ""
    assert "-k" in capsys.readouterr().err


def test_chromatic(monkeypatch):
    code, out = run(["chromatic"], emit_dimacs(cycle_graph(4)), monkeypatch)
    data = json.loads(out)
    assert data["chi"] == 2
    assert data["polynomial"]["coefficients"] == ["0", "-3", "6", "-4", "1"]
    assert [row["count"] for row in data["table"]] == ["0", "0", "2", "18"]


def test_kempe_and_critical(monkeypatch):
    code, out = run(["kempe", "--pair", "0", "3"], emit_dimacs(FOUR_PATH.graph), monkeypatch)
    assert code == 0 and json.loads(out)["report"]["edgeChain"] is True
    code, out = run(["kempe", "-k", "1"], emit_dimacs(FOUR_PATH.graph), monkeypatch)
    assert code == 1
    code, out = run(["critical"], emit_dimacs(cycle_graph(5)), monkeypatch)
    assert json.loads(out)["isKCritical"] is True
    code, out = run(["critical", "--pair", "0", "1"], emit_dimacs(cycle_graph(5)), monkeypatch)
    assert json.loads(out)["holds"] is True


def test_input_file(tmp_path):
    path = tmp_path / "g.col"
    path.write_text(emit_dimacs(FIG1A.graph))
    code, out = run(["chromatic", "-i", str(path)])
    assert code == 0 and json.loads(out)["chi"] == 3
    code, _ = run(["chromatic", "-i", str(tmp_path / "missing.col")])
    assert code == 1


def test_fixtures_round_trip_through_relations(monkeypatch):
    code, out = run(["fixtures"], "", monkeypatch)
    listed = json.loads(out)
    assert [f["name"] for f in listed] == list(FIGURES)
    assert all(f["verified"] for f in listed)
    for f in listed:
        code, out = run(["relations", "-k", str(f["k"])], f["dimacs"], monkeypatch)
        pairs = {(p["u"], p["v"]): p["status"] for p in json.loads(out)["pairs"]}
        assert pairs[tuple(f["pair"])] == "non-drawn-implicit-edge"


def test_fixture_dimacs_needs_a_name(monkeypatch):
    code, _ = run(["fixtures", "--format", "dimacs"], "", monkeypatch)
    assert code == 1
    code, out = run(["fixtures", "--format", "dimacs", "--name", "fig1a"], "", monkeypatch)
    assert code == 0 and parse_dimacs(out) == FIG1A.graph


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "implicol", "relations", "-k", "2"],
                          input=emit_dimacs(FOUR_PATH.graph), capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["explicitEdgesAdded"] == [[0, 3]]


@pytest.mark.parametrize("argv", [["chromatic", "--format", "dot"], ["kempe", "--format", "dot"]])
def test_unsupported_format(argv, monkeypatch):
    code, out = run(argv, emit_dimacs(FOUR_PATH.graph), monkeypatch)
    assert code == 1 and out == ""
