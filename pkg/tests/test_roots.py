# import Python's standard libraries
import itertools

# import third-party libraries
import pytest
import sympy

# import local files
from utils.errors import InvalidParameterError
from utils.roots import (
    RepType, algebra_dim, build_root_system, classical_root_count, coroot_parity,
    diagram_automorphism_orbits, duality, extended_cartan, normalize_type, parity_combination,
    rep_type, two_rho_coroot, weyl_dim
)

ALL_TYPES = [
    ("A", 1), ("A", 4), ("B", 2), ("B", 5), ("C", 3), ("C", 4),
    ("D", 4), ("D", 5), ("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8),
]

@pytest.mark.parametrize("series, rank", ALL_TYPES)
def test_root_count_matches_closed_form(series, rank):
    rs = build_root_system(series, rank)
    assert len(rs.roots) == classical_root_count(rs.series, rs.rank)
    assert len(rs.positive_roots) * 2 == len(rs.roots)

@pytest.mark.parametrize("series, rank", ALL_TYPES)
def test_adjoint_dimension(series, rank):
    rs = build_root_system(series, rank)
    assert len(rs.roots) + rs.rank == algebra_dim(rs.series, rs.rank)

@pytest.mark.parametrize("series, rank, highest", [
    ("B", 3, (1, 2, 2)),
    ("C", 3, (2, 2, 1)),
    ("D", 5, (1, 2, 2, 1, 1)),
    ("G2", 2, (3, 2)),
    ("F4", 4, (2, 3, 4, 2)),
    ("E8", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
])
def test_highest_root(series, rank, highest):
    assert build_root_system(series, rank).highest_root == highest

def test_reducible_d2_has_no_highest_root():
    rs = build_root_system("D", 2)
    assert rs.highest_root is None
    assert rs.alias == "A1xA1"

def test_extended_cartan_of_a2_is_a_triangle():
    assert extended_cartan(build_root_system("A", 2)) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))

@pytest.mark.parametrize("series, rank", ALL_TYPES[1:])
def test_extended_cartan_is_singular(series, rank):
    cartan = extended_cartan(build_root_system(series, rank))
    assert len(cartan) == rank + 1
    assert all(cartan[i][i] == 2 for i in range(rank + 1))
    assert sympy.Matrix(cartan).det() == 0

def test_extended_cartan_needs_a_highest_root():
    with pytest.raises(InvalidParameterError):
        extended_cartan(build_root_system("D", 2))

@pytest.mark.parametrize("label, rank, expected", [
    ("b", 3, ("B", 3)),
    ("E", 7, ("E7", 7)),
    ("g2", None, ("G2", 2)),
])
def test_normalize_type(label, rank, expected):
    assert normalize_type(label, rank) == expected

@pytest.mark.parametrize("label, rank", [("Z", 3), ("A", 0), ("B", 1), ("G2", 3), ("E", None)])
def test_normalize_type_rejects(label, rank):
    with pytest.raises(InvalidParameterError):
        normalize_type(label, rank)

@pytest.mark.parametrize("series, rank, weight, expected", [
    ("A", 2, (1, 0), 3),
    ("A", 2, (1, 1), 8),
    ("A", 3, (0, 1, 0), 6),
    ("B", 2, (0, 1), 4),
    ("B", 3, (0, 0, 1), 8),
    ("C", 3, (0, 1, 0), 14),
    ("C", 3, (0, 0, 1), 14),
    ("D", 4, (0, 1, 0, 0), 28),
    ("D", 5, (0, 0, 0, 0, 1), 16),
    ("G2", 2, (1, 0), 7),
    ("G2", 2, (0, 1), 14),
    ("F4", 4, (0, 0, 0, 1), 26),
    ("F4", 4, (1, 0, 0, 0), 52),
    ("E6", 6, (1, 0, 0, 0, 0, 0), 27),
    ("E7", 7, (0, 0, 0, 0, 0, 0, 1), 56),
    ("E8", 8, (0, 0, 0, 0, 0, 0, 0, 1), 248),
])
def test_weyl_dimension(series, rank, weight, expected):
    assert weyl_dim(build_root_system(series, rank), weight) == expected

def test_trivial_weight_has_dimension_one():
    for series, rank in ALL_TYPES:
        rs = build_root_system(series, rank)
        assert weyl_dim(rs, (0,) * rs.rank) == 1

@pytest.mark.parametrize("weight", [(1, 0), (1, 0, 0, 0), (1, -1, 0)])
def test_weyl_dimension_rejects_bad_weights(weight):
    with pytest.raises(InvalidParameterError):
        weyl_dim(build_root_system("A", 3), weight)

@pytest.mark.parametrize("series, rank, weight, dual", [
    ("A", 2, (1, 0), (0, 1)),
    ("A", 4, (0, 1, 0, 0), (0, 0, 1, 0)),
    ("D", 5, (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ("D", 4, (0, 0, 0, 1), (0, 0, 0, 1)),
    ("E6", 6, (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1)),
    ("E7", 7, (0, 0, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 0, 1)),
])
def test_duality(series, rank, weight, dual):
    assert duality(build_root_system(series, rank), weight) == dual

@pytest.mark.parametrize("series, rank, weight, expected", [
    ("A", 1, (1,), RepType.SYMPLECTIC),
    ("A", 1, (2,), RepType.ORTHOGONAL),
    ("A", 2, (1, 0), RepType.NOT_SELF_DUAL),
    ("A", 3, (0, 1, 0), RepType.ORTHOGONAL),
    ("A", 5, (0, 0, 1, 0, 0), RepType.SYMPLECTIC),
    ("B", 2, (0, 1), RepType.SYMPLECTIC),
    ("B", 3, (0, 0, 1), RepType.ORTHOGONAL),
    ("C", 3, (1, 0, 0), RepType.SYMPLECTIC),
    ("C", 3, (0, 1, 0), RepType.ORTHOGONAL),
    ("D", 5, (0, 0, 0, 0, 1), RepType.NOT_SELF_DUAL),
    ("D", 6, (0, 0, 0, 0, 0, 1), RepType.SYMPLECTIC),
    ("G2", 2, (1, 0), RepType.ORTHOGONAL),
    ("E6", 6, (1, 0, 0, 0, 0, 0), RepType.NOT_SELF_DUAL),
    ("E7", 7, (0, 0, 0, 0, 0, 0, 1), RepType.SYMPLECTIC),
    ("E7", 7, (1, 0, 0, 0, 0, 0, 0), RepType.ORTHOGONAL),
])
def test_rep_type(series, rank, weight, expected):
    assert rep_type(build_root_system(series, rank), weight) == expected

def test_e7_parity_combination_is_the_odd_part_of_two_rho_coroot():
    rs = build_root_system("E7")
    odd = tuple(i + 1 for i, c in enumerate(two_rho_coroot(rs)) if (c % 2))
    assert odd == parity_combination(rs) == (2, 5, 7)

@pytest.mark.parametrize("series, rank", [
    ("A", 1), ("A", 3), ("A", 5), ("B", 2), ("B", 3), ("B", 5), ("C", 2), ("C", 3),
    ("D", 4), ("D", 5), ("D", 6), ("G2", 2), ("F4", 4),
])
def test_self_dual_types_agree_with_coroot_parity(series, rank):
    rs = build_root_system(series, rank)
    for weight in itertools.product((0, 1), repeat=rs.rank):
        kind = rep_type(rs, weight)
        if (kind == RepType.NOT_SELF_DUAL):
            continue
        assert (kind == RepType.SYMPLECTIC) == (coroot_parity(rs, weight) == 1), weight

@pytest.mark.parametrize("series, rank, orbits", [
    ("A", 3, [(0, 2), (1,)]),
    ("B", 3, [(0,), (1,), (2,)]),
    ("D", 4, [(0, 2, 3), (1,)]),
    ("D", 5, [(0,), (1,), (2,), (3, 4)]),
    ("E6", 6, [(0, 5), (1,), (2, 4), (3,)]),
])
def test_diagram_automorphism_orbits(series, rank, orbits):
    assert diagram_automorphism_orbits(build_root_system(series, rank)) == orbits
