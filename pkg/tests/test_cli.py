# import Python's standard libraries
import io
import json

# import third-party libraries
import pytest

# import local files
import weylgap
from utils.spinner import Spinner
from utils.suites import irrep_dim_checks

def run_cli(capsys, *argv):
    code = weylgap.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def test_stabilizer_of_the_lorentzian_tensor(capsys, clean_config):
    code, out, _ = run_cli(capsys, "stabilizer", "--tensor", "lor", "--n", "6")
    assert code == weylgap.EXIT_PASS
    assert "co-dim" in out
    assert "1/1 checks passed" in out

def test_irrep_dimension(capsys, clean_config):
    code, out, _ = run_cli(capsys, "irrep-dim", "--type", "C", "--rank", "3", "--weight", "0,1,0")
    assert code == weylgap.EXIT_PASS
    assert "14" in out

def test_rep_type(capsys, clean_config):
    code, out, _ = run_cli(capsys, "rep-type", "--type", "E7", "--weight", "0,0,0,0,0,0,1")
    assert code == weylgap.EXIT_PASS
    assert "symplectic" in out

def test_regular_enumeration(capsys, clean_config):
    code, out, _ = run_cli(capsys, "enumerate", "regular", "--type", "G2", "--rank", "2")
    assert code == weylgap.EXIT_PASS
    assert "[A2, A1xA1]" in out

def test_levi_single_node(capsys, clean_config):
    code, out, _ = run_cli(capsys, "levi", "--type", "B", "--rank", "4", "--cross", "2")
    assert code == weylgap.EXIT_PASS
    assert "1/1 checks passed" in out

def test_report_and_realforms(capsys, clean_config):
    assert run_cli(capsys, "report", "riemannian", "--n", "5")[0] == weylgap.EXIT_PASS
    assert run_cli(capsys, "realforms", "--rank", "2")[0] == weylgap.EXIT_PASS

@pytest.mark.parametrize("argv", [
    ("irrep-dim", "--type", "C", "--rank", "3", "--weight", "1,0"),
    ("irrep-dim", "--type", "C", "--rank", "3", "--weight", "a,b,c"),
    ("stabilizer", "--tensor", "lor", "--n", "3"),
    ("stabilizer", "--tensor", "lor", "--n", "6", "--signature", "6"),
    ("levi", "--type", "B", "--rank", "3", "--cross", "5"),
    ("all", "--max-n", "3"),
])
def test_invalid_parameters_exit_with_usage_code(capsys, clean_config, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == weylgap.EXIT_USAGE
    assert "Invalid parameters" in err

@pytest.mark.parametrize("argv", [("stabilizer", "--bogus"), ("frobnicate",), ()])
def test_unknown_arguments_are_rejected_by_the_parser(capsys, argv):
    with pytest.raises(SystemExit) as info:
        weylgap.run(list(argv))
    assert info.value.code == 2

def test_json_report_is_byte_identical_across_runs(capsys, clean_config, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ("stabilizer", "--tensor", "null-plane", "--n", "5")
    assert run_cli(capsys, *argv, "--json", str(first))[0] == weylgap.EXIT_PASS
    assert run_cli(capsys, *argv, "--json", str(second))[0] == weylgap.EXIT_PASS
    assert first.read_bytes() == second.read_bytes()
    rows = json.loads(first.read_text())
    assert rows[0]["ms"] is None
    assert rows[0]["pass"] is True

def test_timings_fill_the_ms_field(capsys, clean_config, tmp_path):
    path = tmp_path / "timed.json"
    run_cli(capsys, "irrep-dim", "--type", "A", "--rank", "2", "--weight", "1,1", "--timings", "--json", str(path))
    assert all(isinstance(row["ms"], float) for row in json.loads(path.read_text()))

def test_parallel_execution_keeps_the_order():
    checks = irrep_dim_checks("B", 4, [0, 0, 0, 1]) + irrep_dim_checks("D", 5, [0, 0, 0, 1, 0])
    assert weylgap.execute(checks, 2, False) == weylgap.execute(checks, 1, False)

def test_execute_reports_each_result_in_order():
    checks = irrep_dim_checks("B", 4, [0, 0, 0, 1]) + irrep_dim_checks("D", 5, [0, 0, 0, 1, 0])
    seen = []
    results = weylgap.execute(checks, 1, False, on_done=seen.append)
    assert seen == results

def test_spinner_counts_finished_checks():
    spinner = Spinner("Running", stream=io.StringIO()).track(3)
    assert spinner.progress == "[0/3] "
    spinner.advance("irrep-dim")
    assert spinner.progress == "[1/3] "
    assert spinner.message == "irrep-dim"
    assert not spinner.enabled

def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        weylgap.run(["--version"])
    assert info.value.code == 0
    assert "weylgap v" in capsys.readouterr().out

@pytest.mark.slow
def test_riemannian_report_in_dimension_8(capsys, clean_config):
    code, out, _ = run_cli(capsys, "report", "riemannian", "--n", "8")
    assert code == weylgap.EXIT_PASS
    assert "rejected-sp2xsp4" in out
