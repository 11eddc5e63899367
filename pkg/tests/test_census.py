# import third-party libraries
import pytest

# import local files
from utils.census import (
    BoundCase, SubalgebraDescriptor, SubalgebraProvenance, admissible_report, bounds,
    identify_cartan, is_closed_symmetric, levi_factor, levi_table_dim,
    max_regular_reductive, normalize_factor, pi_system_roots
)
from utils.errors import InvalidParameterError
from utils.roots import build_root_system

@pytest.mark.parametrize("n, c0", [(4, 4), (5, 4), (6, 9), (7, 11), (8, 16), (10, 29)])
def test_riemannian_isotropy_bound(n, c0):
    assert bounds(n, BoundCase.RIEMANNIAN).c0 == c0

@pytest.mark.parametrize("n, case, c0", [
    (4, "lorentzian", 3),
    (6, "lorentzian", 8),
    (4, "other-signature", 5),
    (7, "other-signature", 14),
])
def test_indefinite_isotropy_bounds(n, case, c0):
    result = bounds(n, case)
    assert result.c0 == c0
    assert result.c == result.submaximal == result.upper == c0 + n

def test_bounds_reject_bad_input():
    with pytest.raises(InvalidParameterError):
        bounds(3, "riemannian")
    with pytest.raises(InvalidParameterError):
        bounds(6, "euclidean")

@pytest.mark.parametrize("series, rank, expected", [
    ("so", 1, ([], 0)),
    ("so", 2, ([], 1)),
    ("so", 3, ([("A", 1)], 0)),
    ("so", 4, ([("A", 1), ("A", 1)], 0)),
    ("so", 6, ([("A", 3)], 0)),
    ("so", 7, ([("B", 3)], 0)),
    ("sp", 4, ([("B", 2)], 0)),
    ("sp", 6, ([("C", 3)], 0)),
])
def test_normalize_factor(series, rank, expected):
    assert normalize_factor(series, rank) == expected

def test_normalize_factor_rejects_odd_symplectic_size():
    with pytest.raises(InvalidParameterError):
        normalize_factor("sp", 3)

def test_descriptor_labels_and_dimension():
    descriptor = SubalgebraDescriptor.build([("so", 2), ("sp", 4), ("A", 2)], 0, SubalgebraProvenance.LEVI)
    assert descriptor.type_label == "CxA2xB2"
    assert descriptor.dim == 1 + 8 + 10
    assert descriptor.semisimple_rank == 4

def test_identify_cartan_ignores_node_order():
    c3 = build_root_system("C", 3).cartan
    reversed_c3 = tuple(tuple(row[::-1]) for row in c3[::-1])
    assert identify_cartan(reversed_c3) == (("C", 3),)
    assert identify_cartan(((2, 0), (0, 2))) == (("A", 1), ("A", 1))

@pytest.mark.parametrize("series, rank, node, label", [
    ("B", 3, 1, "CxB2"),
    ("B", 3, 3, "CxA2"),
    ("D", 4, 2, "CxA1xA1xA1"),
    ("D", 5, 5, "CxA4"),
    ("E6", 6, 1, "CxD5"),
    ("E7", 7, 7, "CxE6"),
])
def test_levi_factor_labels(series, rank, node, label):
    assert levi_factor(series, rank, node).type_label == label

@pytest.mark.parametrize("series, rank", [("B", 2), ("B", 5), ("D", 4), ("D", 6)])
def test_levi_factor_matches_closed_form(series, rank):
    for node in range(1, rank + 1):
        assert levi_factor(series, rank, node).dim == levi_table_dim(series, rank, node)

def test_levi_factor_rejects_bad_node():
    with pytest.raises(InvalidParameterError):
        levi_factor("B", 3, 4)
    with pytest.raises(InvalidParameterError):
        levi_table_dim("E", 6, 1)

@pytest.mark.parametrize("series, rank, labels", [
    ("B", 3, ["CxB2", "A1xA1xA1", "A3"]),
    ("D", 5, ["CxD4", "A1xA1xA3", "A1xA1xA3", "CxA4", "CxA4"]),
    ("G2", 2, ["A2", "A1xA1"]),
])
def test_max_regular_reductive(series, rank, labels):
    assert [d.type_label for d in max_regular_reductive(build_root_system(series, rank))] == labels

def test_max_regular_reductive_skips_composite_coefficients():
    # E8 nodes with coefficients 4 and 6 give nothing maximal
    descriptors = max_regular_reductive(build_root_system("E8"))
    assert len(descriptors) == 5
    assert [d.note for d in descriptors] == ["k=1", "k=2", "k=5", "k=7", "k=8"]

def test_max_regular_reductive_needs_a_simple_system():
    with pytest.raises(InvalidParameterError):
        max_regular_reductive(build_root_system("D", 2))

@pytest.mark.parametrize("series, rank", [("B", 4), ("D", 5), ("G2", 2), ("F4", 4)])
def test_pi_system_root_sets_are_closed(series, rank):
    rs = build_root_system(series, rank)
    for descriptor in max_regular_reductive(rs):
        node = int(descriptor.note.split("=")[1])
        subset = pi_system_roots(rs, node, descriptor.provenance)
        assert is_closed_symmetric(rs, subset)
        assert len(subset) + rs.rank == descriptor.dim

def test_closure_check_spots_a_missing_sum():
    rs = build_root_system("A", 2)
    simple = [r for r in rs.roots if (sum(r) in (1, -1))]
    assert not is_closed_symmetric(rs, simple)

@pytest.mark.parametrize("n, dims", [
    (5, [6, 4, 4]),
    (6, [10, 9]),
    (7, [15, 11]),
    (8, [21, 16]),
    pytest.param(9, [28, 22], marks=pytest.mark.slow),
    pytest.param(10, [36, 29], marks=pytest.mark.slow),
])
def test_admissible_report_retained_dimensions(n, dims):
    report = admissible_report(n)
    assert [d.dim for d in report.retained] == dims
    assert all(d.dim >= report.c0 for d in report.retained)

def test_admissible_report_n8_rejects_the_symplectic_pair():
    report = admissible_report(8)
    rejected = {r.descriptor.name: r.descriptor for r in report.rejected}
    assert rejected["sp(2)xsp(4)"].dim == 13
    assert rejected["sp(2)xsp(4)"].type_label == "A1xB2"

def test_admissible_report_n8_merges_the_spin_representation():
    report = admissible_report(8)
    b3 = [d for d in report.retained if (d.type_label == "B3")]
    assert len(b3) == 1
    assert "triality" in b3[0].note

def test_admissible_report_cites_g2_at_n7():
    report = admissible_report(7)
    assert any(r.reason.startswith("cited:") and r.descriptor.type_label == "G2" for r in report.rejected)
    assert len(report.citations) == 3

@pytest.mark.parametrize("n", [4, 15])
def test_admissible_report_range(n):
    with pytest.raises(InvalidParameterError):
        admissible_report(n, cap=14)
