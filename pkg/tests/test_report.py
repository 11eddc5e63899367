# import Python's standard libraries
import json

# import local files
from utils.report import render_json, render_table, write_json
from utils.schemas import CheckResult, Provenance

RESULTS = [
    CheckResult(check="co-dim", params={"tensor": "lor", "n": 6}, expected=8, computed=8,
                provenance=Provenance.PAPER, passed=True),
    CheckResult(check="s-line-eigenvalues", params={"n": 4}, expected=["2", "2"], computed=["2"],
                provenance=Provenance.DERIVED, passed=False, oracle="invariant_lines(s(4), W(1,3))"),
]

def test_table_has_one_row_per_check_and_a_summary():
    table = render_table(RESULTS, colour=False)
    assert "co-dim" in table
    assert "tensor=lor n=6" in table
    assert "[2, 2]" in table
    assert "PASS" in table and "FAIL" in table
    assert table.endswith("1/2 checks passed")

def test_table_adds_a_timing_column_when_timed():
    timed = [r.model_copy(update={"ms": 1.5}) for r in RESULTS]
    table = render_table(timed, colour=False)
    assert "1.5" in table
    assert "1.5" not in render_table(RESULTS, colour=False)

def test_json_report_shape():
    data = json.loads(render_json(RESULTS))
    assert [sorted(row) for row in data] == [["check", "computed", "expected", "ms", "params", "pass", "provenance"]] * 2
    assert data[0]["pass"] is True
    assert data[0]["ms"] is None
    assert data[1]["provenance"] == "DERIVED"

def test_json_report_is_deterministic():
    assert render_json(RESULTS) == render_json([r.model_copy() for r in RESULTS])
    assert render_json(RESULTS).endswith("\n")

def test_write_json_creates_folders(tmp_path):
    path = tmp_path / "nested" / "report.json"
    assert write_json(RESULTS, path) == path
    assert path.read_text(encoding="utf-8") == render_json(RESULTS)

def test_write_json_reports_unwritable_paths(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert write_json(RESULTS, blocker / "report.json") is None
