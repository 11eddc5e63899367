# import third-party libraries
import pytest
from sympy import QQ

# import local files
from utils.constants import CONSTANTS as C
from utils.errors import InvalidParameterError
from utils.roots import RepType
from utils.schemas import Provenance
from utils.suites import (
    Check, Suite, all_checks, fundamental_dim, irrep_dim_checks, json_safe, levi_checks,
    lorentzian_checks, other_signature_checks, real_form_checks, real_form_pair_count,
    regular_checks, rep_type_checks, riemannian_checks, run_check, stabilizer_checks
)

def assert_all_pass(checks):
    results = [run_check(check) for check in checks]
    failed = [(r.check, r.params, r.expected, r.computed) for r in results if (not r.passed)]
    assert not failed
    return results

def test_json_safe_renders_rationals_and_enums():
    assert json_safe({"a": [QQ(1, 2), QQ(3)], "b": RepType.SYMPLECTIC}) == {"a": ["1/2", "3"], "b": "symplectic"}
    assert json_safe((1, True, None)) == [1, True, None]

def test_run_check_compares_json_forms():
    check = Check("half", {}, "1/2", Provenance.TRIVIAL, lambda: QQ(1, 2), {})
    result = run_check(check)
    assert result.passed
    assert result.ms is None
    assert run_check(check, timings=True).ms is not None

def test_run_check_reports_mismatches():
    result = run_check(Check("wrong", {"n": 4}, 1, Provenance.PAPER, lambda n: n, {"n": 4}))
    assert not result.passed
    assert result.computed == 4

@pytest.mark.parametrize("n", [4, 5, 6] + [pytest.param(n, marks=pytest.mark.slow) for n in range(7, 11)])
def test_riemannian_suite(n):
    assert_all_pass(riemannian_checks(n))

@pytest.mark.parametrize("n", [4, 5, 6] + [pytest.param(n, marks=pytest.mark.slow) for n in range(7, 11)])
def test_lorentzian_suite(n):
    assert_all_pass(lorentzian_checks(n))

@pytest.mark.parametrize("n", [4, 5, 6] + [pytest.param(n, marks=pytest.mark.slow) for n in range(7, 10)])
def test_other_signature_suite(n):
    assert_all_pass(other_signature_checks(n))

@pytest.mark.parametrize("series, rank", [("B", 2), ("B", 5), ("D", 4), ("D", 7), ("G2", 2)])
def test_regular_and_levi_suites(series, rank):
    assert_all_pass(regular_checks(series, rank) + levi_checks(series, rank))

def test_levi_suite_for_a_single_node():
    results = assert_all_pass(levi_checks("E7", 7, 7))
    assert all(r.params["cross"] == 7 for r in results)

def test_regular_suite_needs_a_simple_type():
    with pytest.raises(InvalidParameterError):
        regular_checks("D", 2)

@pytest.mark.parametrize("series, rank, weight", [
    ("A", 3, (1, 0, 1)), ("C", 3, (0, 1, 0)), ("D", 5, (0, 0, 0, 1, 0)), ("E6", 6, (1, 0, 0, 0, 0, 1)),
])
def test_irrep_and_rep_type_suites(series, rank, weight):
    assert_all_pass(irrep_dim_checks(series, rank, weight) + rep_type_checks(series, rank, weight))

@pytest.mark.parametrize("ell, k, dim", [(3, 1, 6), (3, 2, 14), (3, 3, 14), (4, 2, 27), (4, 4, 42)])
def test_symplectic_fundamental_dimensions(ell, k, dim):
    assert fundamental_dim("C", ell, k) == dim

def test_irrep_suite_rejects_bad_weights():
    with pytest.raises(InvalidParameterError):
        irrep_dim_checks("C", 3, (1, 0))
    with pytest.raises(InvalidParameterError):
        rep_type_checks("B", 3, (0, -1, 0))

@pytest.mark.parametrize("kind, n", [("lor", 6), ("null-plane", 5), ("riem1", 6), ("riem2", 6), ("so-n-minus-2", 5)])
def test_stabilizer_suite(kind, n):
    assert_all_pass(stabilizer_checks(kind, n))

@pytest.mark.parametrize("kind, n, signature", [
    ("lor", 3, None),
    ("lor", 6, (6, 0)),
    ("riem2", 5, None),
    ("weyl", 6, None),
])
def test_stabilizer_suite_rejects(kind, n, signature):
    with pytest.raises(InvalidParameterError):
        stabilizer_checks(kind, n, signature)

@pytest.mark.parametrize("ell, count", [(2, 6), (3, 5), (4, 8), (5, 7), (6, 10)])
def test_real_form_pair_count(ell, count):
    assert real_form_pair_count(ell) == count

@pytest.mark.parametrize("ell", [2, 3])
def test_real_form_suite(ell):
    assert_all_pass(real_form_checks(ell))

def test_all_checks_is_ordered_and_named():
    checks = all_checks(max_n=5)
    names = [c.name for c in checks]
    assert names[0] == "weyl-space-dim"
    assert "real-form-pairs" in names
    assert len({(c.name, tuple(sorted(c.params.items()))) for c in checks}) == len(checks)
    assert {s.value for s in Suite} >= {"report", "all", "stabilizer"}

def test_default_suite_builds_every_check():
    checks = all_checks(C.DEFAULT_MAX_N, C.DEFAULT_CENSUS_CAP)
    names = {c.name for c in checks}
    assert "rejected-sp2xsp4" in names
    assert all(isinstance(c, Check) for c in checks)

@pytest.mark.slow
def test_default_suite_passes():
    assert_all_pass(all_checks(C.DEFAULT_MAX_N, C.DEFAULT_CENSUS_CAP))

def test_sp2_x_sp4_is_rejected_with_its_dimension():
    checks = [c for c in riemannian_checks(8) if (c.name == "rejected-sp2xsp4")]
    assert len(checks) == 1
    assert run_check(checks[0]).computed == 13
