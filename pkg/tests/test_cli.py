import csv
import io
import json
import math

import pytest

from eigdisp.cli import main
from eigdisp.extremal import canonical_form
from eigdisp.families import star
from eigdisp.graph6 import graph6_encode

import oracles


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_family_stats_both():
    code, text = run(["family-stats", "--family", "complete-split", "--params", "5", "10"])
    assert code == 0
    rec = json.loads(text)
    assert rec["numeric"]["c_d"] == rec["analytic"]["c_d"] == "9/32"
    assert rec["numeric"]["gamma"] == pytest.approx(rec["analytic"]["gamma"], rel=1e-9)


def test_family_stats_csv_matches_json():
    args = ["family-stats", "--family", "kite", "--params", "3", "4", "--numeric"]
    _, js = run(args)
    _, cs = run(args + ["--csv"])
    row = next(csv.DictReader(io.StringIO(cs)))
    rec = json.loads(js)
    assert float(row["numeric.gamma"]) == rec["numeric"]["gamma"]
    assert row["numeric.c_d"] == rec["numeric"]["c_d"]


def test_family_stats_power():
    code, text = run(
        ["family-stats", "--family", "cartesian-power", "--base", "star", "--params", "2", "--power", "2"]
    )
    assert code == 0
    rec = json.loads(text)
    assert rec["analytic"]["c_d"] == rec["numeric"]["c_d"] == "1/16"


def test_output_is_byte_stable():
    args = ["family-stats", "--family", "tripartite", "--params", "4"]
    assert run(args)[1] == run(args)[1]


def test_limits_table_golden_row():
    code, text = run(["limits-table", "--k", "1", "--n", "2000"])
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    row = next(r for r in rows if r["family"] == "S(n,kn)" and r["statistic"] == "gamma")
    assert row["limit"] == pytest.approx(oracles.PHI, abs=1e-15)
    assert row["gap"] <= 5e-3
    inf_rows = [r for r in rows if r["limit"] == "inf"]
    assert inf_rows and all(r["gap"] is None for r in inf_rows)


def test_verify_suite_exit_codes(monkeypatch):
    code, text = run(["verify", "--suite", "clustering"])
    assert code == 0
    assert all(line.startswith("PASS") for line in text.splitlines())
    from eigdisp import cli
    from eigdisp.verify import Check

    monkeypatch.setattr(cli, "run_suite", lambda name, **kw: [Check("x", False), Check("y", False, advisory=True)])
    code, text = run(["verify", "--suite", "oracle"])
    assert code == 2
    assert text.splitlines()[0].startswith("FAIL") and text.splitlines()[1].startswith("NOTE")


def test_search_star(capsys):
    code, text = run(["search", "--n", "6", "--objective", "max-cd"])
    assert code == 0
    rec = json.loads(text)
    assert rec["witnesses"] == [graph6_encode(canonical_form(star(5)))]
    assert "runtime" not in rec
    assert "search finished" in capsys.readouterr().err


def test_search_from_graph6(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Bw\nBg\n")
    code, text = run(["search", "--objective", "max-cd", "--graph6", str(path)])
    assert code == 0
    rec = json.loads(text)
    assert rec["census"] == 2
    assert rec["witnesses"] == [graph6_encode(canonical_form(star(2)))]
    path.write_text("A_\nBw\n")
    assert run(["search", "--objective", "max-cd", "--graph6", str(path)])[0] == 1


def test_stats_stdin_k2(monkeypatch):
    code, text = run(["stats", "--graph6", "-"], stdin="A_\n", monkeypatch=monkeypatch)
    assert code == 0
    rec = json.loads(text)
    assert rec["gamma"] == pytest.approx(1, abs=1e-12)
    assert rec["c_e"] == pytest.approx(0, abs=1e-20)
    assert rec["c_d"] == "0/1"


def test_stats_disconnected_still_reports_clustering(monkeypatch):
    code, text = run(["stats", "--graph6", "-"], stdin="A?\n", monkeypatch=monkeypatch)
    assert code == 0
    rec = json.loads(text)
    assert rec["connected"] is False and "gamma" not in rec


def test_stats_bad_graph6_is_usage_error(monkeypatch, capsys):
    code, _ = run(["stats", "--graph6", "-"], stdin="A~~\n", monkeypatch=monkeypatch)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_clustering_comparison():
    code, text = run(["clustering", "--family", "complete-split", "--n", "2", "--m", "2"])
    assert code == 0
    rec = json.loads(text)
    assert rec["equal"] is True
    assert rec["direct"]["average_clustering"] == "5/6"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nope"],
        ["family-stats", "--family", "kite", "--params", "x"],
        ["family-stats", "--family", "kite", "--params", "1"],
        ["family-stats", "--family", "cartesian-power", "--params", "2"],
        ["search", "--objective", "max-cd"],
        ["clustering", "--family", "kite", "--n", "2", "--m", "2"],
        ["verify", "--suite", "everything"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv)[0] == 1
    assert capsys.readouterr().err


def test_numeric_failure_exit_code(capsys):
    code, _ = run(["family-stats", "--family", "star", "--params", "20000", "--numeric"])
    assert code == 3
    assert "numeric failure" in capsys.readouterr().err
    code, text = run(["family-stats", "--family", "star", "--params", "20000", "--numeric", "--tol", "1e-10"])
    assert code == 0
    assert json.loads(text)["numeric"]["gamma"] == pytest.approx(math.sqrt(20000), rel=1e-9)


def test_conjectures_small():
    code, text = run(["conjectures", "--n-min", "5", "--n-max", "5"])
    assert code == 0
    rows = json.loads(text)["rows"]
    assert rows[0]["n"] == 5
    assert rows[0]["max_c_d"]["verdict"] == "CONFIRMED"
