# import third-party libraries
import pytest
from sympy import QQ, QQ_I

# import local files
from utils.constants import CONSTANTS as C
from utils.errors import ClosureError, DimensionMismatchError, InvalidParameterError, NotInvariantError, NotSymmetricError
from utils.exact import (
    Span, apply, as_scalar, columns, common_rational_eigenlines, from_columns,
    identity, kernel, matrix, normalize_line, rank, restrict, signature, trace
)

def test_as_scalar_accepts_the_documented_inputs():
    assert as_scalar("3/6") == QQ(1, 2)
    assert as_scalar(4) == QQ(4)
    assert as_scalar((1, -2), QQ_I) == QQ_I(1, -2)
    with pytest.raises(InvalidParameterError):
        as_scalar((1, 1), QQ)

def test_matrix_rejects_ragged_rows():
    with pytest.raises(DimensionMismatchError):
        matrix([[1, 2], [3]])

def test_rank_and_kernel():
    m = matrix([[1, 1]])
    assert rank(m) == 1
    k = kernel(m)
    assert k.shape == (2, 1)
    assert apply(m, columns(k)[0]) == {}

def test_kernel_of_zero_matrix_is_everything():
    assert kernel(matrix([[0, 0, 0]])).shape == (3, 3)

def test_kernel_of_invertible_matrix_is_empty():
    assert kernel(identity(3)).shape == (3, 0)

def test_trace_stays_in_the_matrix_domain():
    assert trace(matrix([[1, 2], [3, "1/2"]])) == QQ(3, 2)
    assert trace(matrix([[(1, 1), 0], [0, (0, -3)]], QQ_I)) == QQ_I(1, -2)
    assert trace(matrix([[0, 5], [7, 0]])) == QQ(0)

@pytest.mark.parametrize("rows, expected", [
    ([[1, 0, 0], [0, -1, 0], [0, 0, 0]], (1, 1, 1)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[2, 1], [1, 2]], (2, 0, 0)),
    ([[0, 0, 1], [0, 1, 0], [1, 0, 0]], (2, 1, 0)),
])
def test_signature(rows, expected):
    assert signature(matrix(rows)) == expected

def test_signature_needs_a_symmetric_matrix():
    with pytest.raises(NotSymmetricError):
        signature(matrix([[1, 2], [0, 1]]))
    with pytest.raises(NotSymmetricError):
        signature(matrix([[1, 2]]))

def test_signature_is_invariant_under_congruence(rng):
    for _ in range(C.PROPERTY_INSTANCES):
        size = rng.randint(2, 5)
        diagonal = [rng.choice((-1, 0, 1)) for _ in range(size)]
        d = matrix([[diagonal[i] if (i == j) else 0 for j in range(size)] for i in range(size)])
        while (True):
            p = matrix([[rng.randint(-3, 3) for _ in range(size)] for _ in range(size)])
            if (rank(p) == size):
                break
        congruent = p.transpose() * d * p
        expected = (diagonal.count(1), diagonal.count(-1), diagonal.count(0))
        assert signature(congruent) == expected

def test_span_membership_and_coordinates():
    span = Span([{0: QQ(1), 1: QQ(1)}, {1: QQ(1)}], 3)
    assert span.dim == 2
    assert span.contains({0: QQ(2)})
    assert not span.contains({2: QQ(1)})
    assert span.coordinates({0: QQ(2), 1: QQ(5)}) == {0: QQ(2), 1: QQ(3)}
    with pytest.raises(NotInvariantError):
        span.coordinates({2: QQ(1)})

def test_span_rejects_dependent_generators():
    with pytest.raises(ClosureError):
        Span([{0: QQ(1)}, {0: QQ(2)}], 2)
    assert Span([{0: QQ(1)}, {0: QQ(2)}], 2, require_independent=False).dim == 1

def test_span_equality_ignores_generators():
    assert Span([{0: QQ(1)}, {1: QQ(1)}], 2) == Span([{0: QQ(1), 1: QQ(1)}, {0: QQ(1), 1: QQ(-1)}], 2)

def test_restrict_to_invariant_subspace():
    op = matrix([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    basis = from_columns([{0: QQ(1)}, {2: QQ(1)}], 3)
    assert restrict(op, basis) == matrix([[2, 0], [0, 5]])

def test_restrict_detects_a_non_invariant_subspace():
    op = matrix([[0, 1], [1, 0]])
    with pytest.raises(NotInvariantError):
        restrict(op, from_columns([{0: QQ(1)}], 2))
    with pytest.raises(DimensionMismatchError):
        restrict(identity(3), from_columns([{0: QQ(1)}], 2))

def test_normalize_line():
    assert normalize_line({1: QQ(3), 2: QQ(6)}) == {1: QQ(1), 2: QQ(2)}
    with pytest.raises(InvalidParameterError):
        normalize_line({})

def test_eigenlines_of_identity():
    result = common_rational_eigenlines([identity(2)], identity(2))
    assert result.complete
    assert [line.eigenvalues for line in result.lines] == [(QQ(1),), (QQ(1),)]

def test_eigenlines_of_a_diagonal_family():
    family = [matrix([[1, 0], [0, 2]]), matrix([[3, 0], [0, 3]])]
    result = common_rational_eigenlines(family, identity(2))
    assert result.complete
    assert [(line.vector, line.eigenvalues) for line in result.lines] == [
        ({0: QQ(1)}, (QQ(1), QQ(3))),
        ({1: QQ(1)}, (QQ(2), QQ(3))),
    ]

def test_eigenlines_without_real_eigenvalues():
    result = common_rational_eigenlines([matrix([[0, -1], [1, 0]])], identity(2))
    assert result.lines == []
    assert result.complete

def test_irrational_eigenvalues_mark_the_search_incomplete():
    result = common_rational_eigenlines([matrix([[0, 2], [1, 0]])], identity(2))
    assert result.lines == []
    assert not result.complete

def test_eigenlines_in_a_subspace_given_as_vectors():
    op = matrix([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
    result = common_rational_eigenlines([op], [{1: QQ(1)}, {2: QQ(1)}], length=3)
    assert len(result.lines) == 2
    assert all(line.eigenvalues == (QQ(2),) for line in result.lines)
    with pytest.raises(InvalidParameterError):
        common_rational_eigenlines([op], [{1: QQ(1)}])

def test_empty_family_gives_the_echelon_lines():
    result = common_rational_eigenlines([], identity(3))
    assert len(result.lines) == 3
    assert all(line.eigenvalues == () for line in result.lines)
