# import Python's standard libraries
import math

# import third-party libraries
import pytest

# import local files
from utils import real_forms
from utils.errors import DimensionMismatchError, InvalidParameterError
from utils.mat_lie import construct_subalgebra
from utils.real_forms import (
    RealFormId, ambient_real_form, anti_involution, enumerate_real_forms, family_parameters,
    fixed_subalgebra, involution_family, lorentzian_surrogate, orthogonal_label, real_points
)
from utils.suites import REAL_FORM_TABLES, real_form_pair_count

@pytest.mark.parametrize("p, q, label", [(0, 4, "so(4)"), (4, 0, "so(4)"), (3, 1, "so(1,3)"), (2, 2, "so(2,2)")])
def test_orthogonal_label(p, q, label):
    assert orthogonal_label(p, q) == label

def test_family_parameters():
    assert [f for f, _ in family_parameters(2)] == ["a", "a", "a", "b", "b", "b", "c", "d"]
    assert family_parameters(3)[0] == ("a", {"p": 3, "q": 0})
    assert len(family_parameters(3)) == 7

@pytest.mark.parametrize("family, params, square_sign, swaps", [
    ("a", {"p": 1, "q": 1}, 1, False),
    ("b", {"p": 2, "q": 0}, -1, False),
    ("c", {}, 1, True),
    ("d", {"k": 1}, -1, True),
])
def test_involution_families(family, params, square_sign, swaps):
    theta = involution_family(2, family, **params)
    assert theta.square_sign == square_sign
    assert theta.swaps == swaps

@pytest.mark.parametrize("ell, family, params", [
    (2, "e", {}),
    (2, "a", {"p": 2, "q": 1}),
    (2, "b", {}),
    (3, "d", {}),
    (0, "c", {}),
])
def test_involution_family_rejects(ell, family, params):
    with pytest.raises(InvalidParameterError):
        involution_family(ell, family, **params)

@pytest.mark.parametrize("p, label", [(2, "so(4)"), (1, "so(2,2)"), (0, "so(4)")])
def test_family_a_ambient_forms(p, label):
    assert ambient_real_form(involution_family(2, "a", p=p, q=2 - p)).label == label

@pytest.mark.parametrize("family, params, gl_dim, so_dim", [
    ("a", {"p": 2, "q": 0}, 4, 6),
    ("a", {"p": 1, "q": 1}, 2, 2),
    ("c", {}, 1, 2),
])
def test_fixed_subalgebras(family, params, gl_dim, so_dim):
    theta = involution_family(2, family, **params)
    assert fixed_subalgebra(theta, construct_subalgebra("gl", ell=2)).dim == gl_dim
    assert fixed_subalgebra(theta, construct_subalgebra("so-complex", ell=2)).dim == so_dim

def test_quaternionic_families_give_u_star():
    assert ambient_real_form(involution_family(2, "d")).label == "u*(2,H)"

@pytest.mark.parametrize("family, params, key", [
    ("a", {"p": 2, "q": 0}, (6, 0, (0, 6), (0, 0))),
    ("a", {"p": 1, "q": 1}, (6, 0, (4, 2), (0, 0))),
    ("d", {}, (6, 0, (2, 4), (0, 0))),
])
def test_ambient_invariants_match_the_real_points(family, params, key):
    assert ambient_real_form(involution_family(2, family, **params)).key() == key

def test_ambient_invariants_are_cross_checked():
    theta = involution_family(2, "a", p=1, q=1)
    with pytest.raises(DimensionMismatchError):
        real_forms._confirm(theta, RealFormId("so(4)", 6, 0, (0, 6), (0, 0)))

@pytest.mark.parametrize("ell", [2, 3])
def test_real_points_have_the_complex_dimension(ell):
    ambient = construct_subalgebra("so-complex", ell=ell)
    for family, params in family_parameters(ell):
        theta = involution_family(ell, family, **params)
        fixed = real_points(ambient, lambda y, theta=theta: anti_involution(theta, y))
        assert fixed.dim == math.comb(2 * ell, 2)

@pytest.mark.parametrize("ell", [2, 3])
def test_real_form_tables(ell):
    table = enumerate_real_forms(ell)
    assert sorted([row.ambient.label, row.subalgebra.label] for row in table.rows) == REAL_FORM_TABLES[ell]
    assert len(table.rows) == real_form_pair_count(ell)
    assert not table.lorentzian
    assert table.surrogate == []

def test_real_form_tables_need_rank_two():
    with pytest.raises(InvalidParameterError):
        enumerate_real_forms(1)

@pytest.mark.slow
def test_rank_four_has_a_lorentzian_surrogate():
    table = enumerate_real_forms(4)
    assert table.lorentzian
    assert len(table.rows) == real_form_pair_count(4)
    assert [check.matches for check in table.surrogate] == [True, True]

def test_lorentzian_surrogate_invariants():
    for check in lorentzian_surrogate():
        assert check.matches
        assert check.invariants.dim == 16
        assert check.invariants.center_dim == 1
