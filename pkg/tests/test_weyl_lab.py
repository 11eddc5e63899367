# import Python's standard libraries
import math

# import third-party libraries
import pytest
from sympy import QQ

# import local files
from utils.constants import CONSTANTS as C
from utils.errors import DimensionMismatchError, InvalidParameterError, NotWeylError, TensorFormatError
from utils.mat_lie import MetricForm, bracket, combination, construct_subalgebra, so_basis
from utils.weyl_lab import (
    SkewReading, TensorKind, TensorW, act, co_stabilizer, export_tensor, fixed_space,
    format_rational, import_tensor, invariant_lines, is_weyl, make_tensor,
    riem2_reading_report, sym_length, tensor_form, weyl_dim_formula, weyl_space
)

def random_element(rng, alg):
    return combination([(rng.randint(-3, 3), b) for b in alg.basis], alg.n, alg.domain)

def random_weyl_tensor(rng, space):
    phi = TensorW(space.n, {})
    for t in space.tensors():
        phi = phi + t.scale(rng.randint(-2, 2))
    return phi

@pytest.mark.parametrize("n, dim", [(4, 10), (5, 35), (6, 84)])
def test_weyl_dimension_formula(n, dim):
    assert weyl_dim_formula(n) == dim

@pytest.mark.parametrize("form", [
    MetricForm.diagonal(4), MetricForm.lightcone(5), MetricForm.null_plane(6), MetricForm.diagonal(3, 2),
])
def test_weyl_space_dimension_is_signature_free(form):
    assert weyl_space(form).dim == weyl_dim_formula(form.n)

def test_weyl_space_cache_is_shared_and_bounded():
    assert weyl_space(MetricForm.lightcone(5)) is weyl_space(MetricForm.lightcone(5))
    assert weyl_space.cache_info().maxsize == C.WEYL_SPACE_CACHE_SIZE

def test_weyl_space_needs_n_at_least_4():
    with pytest.raises(InvalidParameterError):
        weyl_space(MetricForm.diagonal(3))

@pytest.mark.parametrize("kind, n", [
    ("null-plane", 4), ("null-plane", 6), ("riem1", 5), ("riem1", 7), ("riem2", 4), ("riem2", 6),
    ("lor", 4), ("lor", 6), ("so-n-minus-2", 5),
])
def test_named_tensors_are_weyl(kind, n):
    phi = make_tensor(kind, n=n)
    assert not phi.is_zero()
    assert is_weyl(phi, tensor_form(kind, n)).ok
    assert weyl_space(tensor_form(kind, n)).contains(phi)

def test_tensor_kinds_reject_small_or_odd_sizes():
    with pytest.raises(InvalidParameterError):
        make_tensor("riem1", n=4)
    with pytest.raises(InvalidParameterError):
        make_tensor("riem2", n=5)
    with pytest.raises(InvalidParameterError):
        make_tensor("ricci", n=5)

def test_tensor_components_have_the_pair_symmetries():
    phi = make_tensor("riem1", n=5)
    assert phi.component(0, 1, 0, 1) == QQ(3, 4)
    assert phi.component(1, 0, 0, 1) == -phi.component(0, 1, 0, 1)
    assert phi.component(0, 0, 1, 2) == 0

def test_the_null_plane_tensor_is_not_weyl_for_a_definite_metric():
    check = is_weyl(make_tensor("null-plane", n=5), MetricForm.diagonal(5))
    assert not check.ok
    assert check.violations
    with pytest.raises(DimensionMismatchError):
        is_weyl(make_tensor("null-plane", n=5), MetricForm.diagonal(6))

@pytest.mark.parametrize("kind, n, dim", [
    ("lor", 4, 3),
    ("lor", 6, 8),
    ("riem1", 5, 4),
    ("riem1", 7, 11),
    ("riem2", 4, 4),
    ("riem2", 6, 9),
    ("null-plane", 5, 7),
    ("null-plane", 6, 10),
])
def test_co_stabilizer_dimensions(kind, n, dim):
    phi = make_tensor(kind, n=n)
    assert co_stabilizer(phi, so_basis(tensor_form(kind, n))).algebra.dim == dim

def test_lorentzian_stabilizer_is_s():
    n = 6
    co = co_stabilizer(make_tensor("lor", n=n), so_basis(tensor_form("lor", n)))
    s = construct_subalgebra("s", n=n)
    assert co.algebra.dim == s.dim
    assert co.algebra.contains_algebra(s)
    assert any(scale for scale in co.scales)

def test_annihilator_drops_the_grading():
    n = 5
    phi = make_tensor("lor", n=n)
    ambient = so_basis(tensor_form("lor", n))
    assert co_stabilizer(phi, ambient, scaled=False).algebra.dim == co_stabilizer(phi, ambient).algebra.dim - 1

def test_co_stabilizer_rejects_zero_and_non_weyl_tensors():
    ambient = so_basis(MetricForm.diagonal(5))
    with pytest.raises(NotWeylError):
        co_stabilizer(TensorW(5, {}), ambient)
    with pytest.raises(NotWeylError):
        co_stabilizer(make_tensor("null-plane", n=5), ambient)

@pytest.mark.parametrize("sizes, dim", [((4, 1), 0), ((3, 1, 1), 1)])
def test_block_fixed_spaces(sizes, dim):
    block = construct_subalgebra("block", n=5, sizes=sizes)
    assert fixed_space(block, weyl_space(block.form)).shape[1] == dim

def test_g2_fixes_no_weyl_tensor():
    g2 = construct_subalgebra("g2", n=7)
    assert fixed_space(g2, weyl_space(g2.form)).shape[1] == 0

def test_r1_fixed_space():
    n = 6
    r1 = construct_subalgebra("r1", n=n)
    assert fixed_space(r1, weyl_space(r1.form)).shape[1] == (n - 1) * (n - 2) // 2 - 1

def test_fixed_space_needs_matching_forms():
    with pytest.raises(DimensionMismatchError):
        fixed_space(construct_subalgebra("r1", n=5), weyl_space(MetricForm.diagonal(5)))

def test_invariant_lines_of_s4():
    s = construct_subalgebra("s", n=4)
    result = invariant_lines(s, weyl_space(s.form))
    assert result.complete
    assert len(result.lines) == 2
    assert [[format_rational(v) for v in line.eigenvalues] for line in result.lines] == [["2"], ["2"]]

@pytest.mark.parametrize("n", [5, 6])
def test_invariant_line_of_s_is_the_lorentzian_tensor(n):
    s = construct_subalgebra("s", n=n)
    result = invariant_lines(s, weyl_space(s.form))
    assert len(result.lines) == 1
    phi = make_tensor("lor", n=n)
    line = result.lines[0].tensor
    lead = min(line.coeffs)
    assert phi.coeffs == line.scale(phi.coeffs[lead] / line.coeffs[lead]).coeffs

def test_riem2_projector_reading_spans_the_unitary_line():
    report = {r.reading: r for r in riem2_reading_report(2)}
    assert report[SkewReading.PROJECTOR].proportional
    assert report[SkewReading.PROJECTOR].weyl

@pytest.mark.parametrize("value, text", [(QQ(3, 6), "1/2"), (QQ(4), "4"), (QQ(-2, 3), "-2/3")])
def test_format_rational(value, text):
    assert format_rational(value) == text

def test_export_then_import_gives_the_same_tensor():
    phi = make_tensor("riem1", n=5)
    text = export_tensor(phi)
    assert text.startswith("# n = 5\n")
    assert import_tensor(text) == phi

@pytest.mark.parametrize("text", [
    "# n = 4\n0 1 0 1 = 1\n",
    "# n = 4\n1 0 0 1 : 1\n",
    "# n = 4\n0 1 0 1 : 1\n0 1 0 1 : 2\n",
    "# n = 4\n0 1 0 5 : 1\n",
    "# n = 4\n0 1 0 1 : x\n",
    "0 1 0 1 : 1\n",
])
def test_import_rejects_malformed_text(text):
    with pytest.raises(TensorFormatError):
        import_tensor(text)

def test_tensor_kinds_cover_the_cli_choices():
    assert {k.value for k in TensorKind} == {"null-plane", "riem1", "riem2", "lor", "so-n-minus-2"}
    assert sym_length(4) == 21

@pytest.mark.parametrize("n", [
    4, 5, 6,
    pytest.param(7, marks=pytest.mark.slow),
    pytest.param(8, marks=pytest.mark.slow),
])
def test_action_is_a_homomorphism_preserving_weyl_tensors(n, rng):
    form = MetricForm.lightcone(n)
    ambient = so_basis(form)
    space = weyl_space(form)
    for _ in range(C.PROPERTY_INSTANCES):
        x, y = random_element(rng, ambient), random_element(rng, ambient)
        phi = random_weyl_tensor(rng, space)
        commutator = act(x, act(y, phi)) + act(y, act(x, phi)).scale(-1)
        assert act(bracket(x, y), phi) == commutator
        assert space.contains(act(x, phi))

@pytest.mark.parametrize("kind, n", [("lor", 5), ("riem1", 5), ("null-plane", 5)])
def test_co_stabilizer_is_scale_invariant(kind, n, rng):
    phi = make_tensor(kind, n=n)
    ambient = so_basis(tensor_form(kind, n))
    base = co_stabilizer(phi, ambient).algebra
    for _ in range(C.PROPERTY_INSTANCES):
        factor = QQ(rng.choice([c for c in range(-9, 10) if (c)]), rng.randint(1, 9))
        scaled = co_stabilizer(phi.scale(factor), ambient).algebra
        assert scaled.dim == base.dim
        assert scaled.contains_algebra(base)
