from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import pytest

from overlapdense.cli import main
from overlapdense.errors import ParseError
from overlapdense.generators import gnm
from overlapdense.graph import format_edge_list, parse_edge_list
from overlapdense.report_io import report_from_json, report_to_json
from overlapdense.solvers import solve_constant_k, solve_general

from _corpus import C7, K4_K4, MATCHING6

K6_TEXT = "".join(f"v{u} v{v}\n" for u in range(6) for v in range(u + 1, 6))


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["solve", "--k", "2", "--lambda", "100", "--mode", "constant_k"], K6_TEXT)
    assert code == 0
    data = json.loads(out)
    assert data["algorithm"] == "singleton"
    assert data["collection"] == [["v0"], ["v1"]]
    assert data["r_value"]["exact"] == "200/1"
    assert data["schema_version"] == 1


def test_lambda_accepts_decimal_and_fraction(monkeypatch, capsys):
    _, a, _ = run(monkeypatch, capsys, ["solve", "--k", "2", "--lambda", "0.25"], K6_TEXT)
    _, b, _ = run(monkeypatch, capsys, ["solve", "--k", "2", "--lambda", "1/4"], K6_TEXT)
    assert json.loads(a)["r_value"] == json.loads(b)["r_value"]


def test_bad_lambda_is_usage_error(monkeypatch, capsys):
    with pytest.raises(SystemExit) as exc:
        run(monkeypatch, capsys, ["solve", "--k", "2", "--lambda", "abc"], K6_TEXT)
    assert exc.value.code == 2


def test_text_output_and_files(tmp_path, monkeypatch, capsys):
    src = tmp_path / "g.txt"
    dst = tmp_path / "out.txt"
    src.write_text(format_edge_list(K4_K4))
    code, out, _ = run(
        monkeypatch, capsys,
        ["solve", "--k", "2", "--lambda", "1", "--mode", "general", "--input", str(src), "--output", str(dst), "--format", "text"],
    )
    assert code == 0 and out == ""
    assert "r = 5 " in dst.read_text()


def test_k_too_large(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["solve", "--k", "6", "--lambda", "1"], K6_TEXT)
    assert code == 2
    assert "k < |V|" in err


def test_parse_error_exit(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["densest"], "a a\n")
    assert code == 2
    assert "line 1" in err


def test_missing_input_file(monkeypatch, capsys):
    code, _, _ = run(monkeypatch, capsys, ["densest", "--input", "/nonexistent/graph.txt"])
    assert code == 2


def test_oracle_budget_exit(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["oracle", "--k", "2", "--lambda", "1"], format_edge_list(K4_K4))
    assert code == 3
    assert "n <= 7" in err
    code, out, _ = run(
        monkeypatch, capsys, ["oracle", "--k", "2", "--lambda", "1", "--max-vertices", "8"], format_edge_list(K4_K4)
    )
    assert code == 0
    assert json.loads(out)["r_value"]["exact"] == "5/1"


@pytest.mark.parametrize("method", ["flow", "peel", "oracle"])
def test_densest(monkeypatch, capsys, method):
    code, out, _ = run(monkeypatch, capsys, ["densest", "--method", method], "a b\nb c\nc a\nc d\n")
    assert code == 0
    data = json.loads(out)
    assert data["set"] == ["a", "b", "c"]
    assert data["density"]["exact"] == "1/1"


@pytest.mark.parametrize("solver", ["constant_k", "no_crossing", "oracle"])
def test_dds(monkeypatch, capsys, solver):
    text = format_edge_list(K4_K4)
    code, out, _ = run(monkeypatch, capsys, ["dds", "--collection", "0,1,2,3", "--solver", solver], text)
    assert code == 0
    assert json.loads(out)["set"] == ["4", "5", "6", "7"]


def test_dds_crossing_is_contract_error(monkeypatch, capsys):
    code, _, err = run(
        monkeypatch, capsys, ["dds", "--collection", "0,1;1,2", "--solver", "no_crossing"], format_edge_list(K4_K4)
    )
    assert code == 2
    assert "crossing" in err


def test_reduce_build(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["reduce", "build"], format_edge_list(MATCHING6))
    data = json.loads(out)
    assert code == 0
    assert (data["lambda"]["exact"], data["threshold"]["exact"]) == ("648/1", "7779/2")


def test_reduce_verify_and_extract(monkeypatch, capsys):
    text = format_edge_list(MATCHING6)
    code, out, _ = run(monkeypatch, capsys, ["reduce", "verify", "--partition", "0,1;2,3;4,5"], text)
    assert code == 0
    assert json.loads(out)["r_value"]["exact"] == "7779/2"
    code, out, _ = run(monkeypatch, capsys, ["reduce", "extract", "--collection", "0,1;2,3;4,5"], text)
    assert code == 0
    assert json.loads(out)["partition"] == [["0", "1"], ["2", "3"], ["4", "5"]]


def test_reduce_invalid_partition(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["reduce", "verify", "--partition", "0,1;1,2;4,5"], format_edge_list(MATCHING6))
    assert code == 2
    assert "overlap" in err


def test_reduce_refusal(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["reduce", "extract", "--collection", "0,1;2,3;4,5,6"], format_edge_list(C7))
    assert code == 4
    assert "no partition certified" in err


def test_gen(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["gen", "--kind", "gnm", "--n", "7", "--m", "12", "--seed", "1"])
    assert code == 0
    assert parse_edge_list(out).m == 12
    code, out, _ = run(monkeypatch, capsys, ["gen", "--kind", "cycle", "--n", "2"])
    assert code == 2


def test_bench_rows(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["bench", "--sizes", "10,14", "--k", "3"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["phase"] for r in rows} >= {"densest", "distinct_2", "total"}
    totals = [r for r in rows if r["phase"] == "total"]
    assert [int(r["n"]) for r in totals] == [10, 14]
    for n in ("10", "14"):
        phases = [int(r["flow_calls"]) for r in rows if r["n"] == n and r["phase"] != "total"]
        total = next(int(r["flow_calls"]) for r in totals if r["n"] == n)
        assert total == sum(phases) > 0


@pytest.mark.parametrize("solver", [solve_constant_k, solve_general])
def test_report_json_round_trip(solver):
    g = gnm(9, 20, seed=5)
    report = solver(g, 4, Fraction(2, 3))
    text = report_to_json(report, g)
    again = report_from_json(text, g)
    assert again == report
    assert report_to_json(again, g) == text


def test_report_json_rejects_garbage():
    with pytest.raises(ParseError):
        report_from_json("{}", K4_K4)
    with pytest.raises(ParseError):
        report_from_json('{"schema_version": 99}', K4_K4)
