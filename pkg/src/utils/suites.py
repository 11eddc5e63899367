# import Python's standard libraries
import math
import time
import enum
from typing import Any, Callable, NamedTuple, Optional

# import third-party libraries
from sympy import QQ

# import local files
if (__package__ is None or __package__ == ""):
    from constants import CONSTANTS as C
    from errors import InvalidParameterError
    from logger import logger
    from schemas import CheckResult, Provenance
    from exact import Span
    from roots import (
        RepType, build_root_system, normalize_type, check_weight, weyl_dim, duality, coroot_parity, rep_type
    )
    from census import (
        BoundCase, SubalgebraDescriptor, SubalgebraProvenance, bounds, admissible_report, levi_factor,
        levi_table_dim, max_regular_reductive, pi_system_roots, is_closed_symmetric
    )
    from mat_lie import (
        MetricForm, MatrixLieAlgebra, so_basis, rotation, grading_element, construct_subalgebra,
        centralizer, stabilizes_subspace, vectorize
    )
    from weyl_lab import (
        TensorKind, weyl_space, weyl_dim_formula, sym_length, make_tensor, tensor_form, co_stabilizer,
        fixed_space, invariant_lines, act, format_rational
    )
    from real_forms import (
        involution_family, ambient_real_form, enumerate_real_forms, family_parameters, real_points,
        anti_involution, orthogonal_label
    )
else:
    from .constants import CONSTANTS as C
    from .errors import InvalidParameterError
    from .logger import logger
    from .schemas import CheckResult, Provenance
    from .exact import Span
    from .roots import (
        RepType, build_root_system, normalize_type, check_weight, weyl_dim, duality, coroot_parity, rep_type
    )
    from .census import (
        BoundCase, SubalgebraDescriptor, SubalgebraProvenance, bounds, admissible_report, levi_factor,
        levi_table_dim, max_regular_reductive, pi_system_roots, is_closed_symmetric
    )
    from .mat_lie import (
        MetricForm, MatrixLieAlgebra, so_basis, rotation, grading_element, construct_subalgebra,
        centralizer, stabilizes_subspace, vectorize
    )
    from .weyl_lab import (
        TensorKind, weyl_space, weyl_dim_formula, sym_length, make_tensor, tensor_form, co_stabilizer,
        fixed_space, invariant_lines, act, format_rational
    )
    from .real_forms import (
        involution_family, ambient_real_form, enumerate_real_forms, family_parameters, real_points,
        anti_involution, orthogonal_label
    )

@enum.unique
class Suite(str, enum.Enum):
    REPORT = "report"
    ENUMERATE = "enumerate"
    LEVI = "levi"
    IRREP_DIM = "irrep-dim"
    REP_TYPE = "rep-type"
    STABILIZER = "stabilizer"
    REALFORMS = "realforms"
    ALL = "all"

class Check(NamedTuple):
    """A named check: compute(**kwargs) is compared with expected exactly.

    compute is a module-level function so that a check can be sent to a worker process.
    """
    name: str
    params: dict[str, Any]
    expected: Any
    provenance: Provenance
    compute: Callable[..., Any]
    kwargs: dict[str, Any]
    oracle: Optional[str] = None

def json_safe(value: Any) -> Any:
    """Lists, tuples and dicts recursively, with rationals rendered as "num/den"."""
    if (value is None or isinstance(value, (bool, int, str, float))):
        return value
    if (isinstance(value, enum.Enum)):
        return value.value
    if (isinstance(value, dict)):
        return {str(k): json_safe(v) for k, v in value.items()}
    if (isinstance(value, (list, tuple))):
        return [json_safe(v) for v in value]
    return format_rational(value)

def run_check(check: Check, timings: bool = False) -> CheckResult:
    """Run one check and wrap the outcome.

    Args:
        check (Check):
            The check to run.
        timings (bool, optional):
            Whether to record the wall time in milliseconds.

    Returns:
        CheckResult:
            The report row; pass is exact equality of computed and expected.
    """
    start = time.perf_counter()
    computed = json_safe(check.compute(**check.kwargs))
    elapsed = (time.perf_counter() - start) * 1000
    expected = json_safe(check.expected)
    passed = computed == expected
    if (not passed):
        logger.warning(f"{check.name} {check.params}: expected {expected!r}, computed {computed!r}")
    else:
        logger.debug(f"{check.name} {check.params}: {computed!r}")
    return CheckResult(
        check=check.name,
        params=check.params,
        expected=expected,
        computed=computed,
        provenance=check.provenance,
        passed=passed,
        ms=round(elapsed, 3) if (timings) else None,
        oracle=check.oracle,
    )

def _same_algebra(a: MatrixLieAlgebra, b: MatrixLieAlgebra) -> bool:
    return a.dim == b.dim and a.contains_algebra(b) and b.contains_algebra(a)

def _form(kind: str, n: int) -> MetricForm:
    if (kind == "diagonal"):
        return MetricForm.diagonal(n)
    if (kind == "lightcone"):
        return MetricForm.lightcone(n)
    return MetricForm.null_plane(n)

def compute_weyl_dim(kind: str, n: int) -> int:
    return weyl_space(_form(kind, n)).dim

def compute_c0(n: int, case: str) -> int:
    return bounds(n, case).c0

def compute_retained_dims(n: int, cap: int) -> list[int]:
    return [d.dim for d in admissible_report(n, cap).retained]

def compute_gap_members(n: int, cap: int) -> int:
    """Retained candidates strictly between so(n-1) and so(n)."""
    low, high = math.comb(n - 1, 2), math.comb(n, 2)
    return sum(1 for d in admissible_report(n, cap).retained if (low < d.dim < high))

def compute_rejected_dim(n: int, cap: int, label: str) -> Optional[int]:
    for rejection in admissible_report(n, cap).rejected:
        if (rejection.descriptor.name == label):
            return rejection.descriptor.dim
    return None

def compute_block_fixed_dim(n: int, sizes: tuple[int, ...]) -> int:
    block = construct_subalgebra("block", n=n, sizes=sizes)
    return fixed_space(block, weyl_space(block.form)).shape[1]

def compute_g2_fixed_dim() -> int:
    g2 = construct_subalgebra("g2", n=7)
    return fixed_space(g2, weyl_space(g2.form)).shape[1]

def compute_r1_fixed_dim(n: int) -> int:
    r1 = construct_subalgebra("r1", n=n)
    return fixed_space(r1, weyl_space(r1.form)).shape[1]

def _co(kind: str, n: int) -> MatrixLieAlgebra:
    return co_stabilizer(make_tensor(kind, n=n), so_basis(tensor_form(kind, n))).algebra

def compute_co_dim(kind: str, n: int) -> int:
    return _co(kind, n).dim

def compute_co_equals(kind: str, n: int, sub: str) -> bool:
    if (sub == "block"):
        other = construct_subalgebra("block", n=n, sizes=(2, n - 2))
    elif (sub == "u"):
        other = construct_subalgebra("u", ell=n // 2)
    else:
        other = construct_subalgebra(sub, n=n)
    return _same_algebra(_co(kind, n), other)

def compute_co_contains_block(n: int) -> bool:
    return _co("riem1", n).contains_algebra(construct_subalgebra("block", n=n, sizes=(2, n - 2)))

def compute_line_count(kind: str, n: Optional[int] = None, ell: Optional[int] = None,
                       mirror: bool = False) -> list[Any]:
    """[number of invariant lines, completeness flag]."""
    alg = construct_subalgebra(kind, n=n, ell=ell, mirror=mirror)
    result = invariant_lines(alg, weyl_space(alg.form))
    return [len(result.lines), result.complete]

def compute_so3r_r1_lines() -> list[Any]:
    """Lines of so(3)_R x r1 in so(1,5): the graded n = 6 candidate without its grading element."""
    graded = construct_subalgebra("n6-graded", n=6)
    alg = graded.subalgebra(graded.basis[1:], name="so3-R x r1")
    result = invariant_lines(alg, weyl_space(alg.form))
    return [len(result.lines), result.complete]

def compute_line_eigenvalues(kind: str, n: int) -> list[str]:
    alg = construct_subalgebra(kind, n=n)
    result = invariant_lines(alg, weyl_space(alg.form))
    return sorted(format_rational(e) for line in result.lines for e in line.eigenvalues)

def compute_lor_in_lines(n: int) -> bool:
    """Whether w_lor(n) lies in the span of the s(n)-invariant lines."""
    alg = construct_subalgebra("s", n=n)
    result = invariant_lines(alg, weyl_space(alg.form))
    span = Span([line.tensor.coeffs for line in result.lines], sym_length(n), QQ, require_independent=False)
    return span.contains(make_tensor("lor", n=n).coeffs)

def compute_grading_scales_lor(n: int) -> bool:
    """Whether the grading element maps w_lor(n) to a nonzero multiple of itself."""
    phi = make_tensor("lor", n=n)
    image = act(grading_element(n), phi)
    if (image.is_zero()):
        return False
    lead = min(phi.coeffs)
    ratio = image.coeffs.get(lead, QQ(0)) / phi.coeffs[lead]
    return image.coeffs == phi.scale(ratio).coeffs

def compute_so_n_minus_2_contains(n: int, part: str) -> bool:
    co = _co("so-n-minus-2", n)
    if (part == "r1"):
        return co.contains_algebra(construct_subalgebra("r1", n=n))
    basis = [rotation(n, i, j) for i in range(1, n - 1) for j in range(i + 1, n - 1)]
    return co.contains_algebra(MatrixLieAlgebra(basis, n, QQ, MetricForm.lightcone(n), name=f"so({n - 2})"))

def compute_stabilizes(kind: str, n: int) -> list[Any]:
    """[stabilizes, form rank] for s(n) on span{e0, e1} or for p2 on its null plane."""
    alg = construct_subalgebra(kind, n=n)
    if (kind == "s"):
        subspace = [{0: QQ(1)}, {1: QQ(1)}]
    else:
        subspace = [{n - 2: QQ(1)}, {n - 1: QQ(1)}]
    result = stabilizes_subspace(alg, subspace)
    return [result.stabilizes, result.form_rank]

def compute_regular_labels(type_label: str, rank: int) -> list[str]:
    return [d.type_label for d in max_regular_reductive(build_root_system(type_label, rank))]

def compute_regular_ranks(type_label: str, rank: int) -> list[list[int]]:
    """[semisimple rank, center dim] of every emitted descriptor."""
    rs = build_root_system(type_label, rank)
    return [[d.semisimple_rank, d.center] for d in max_regular_reductive(rs)]

def compute_regular_closed(type_label: str, rank: int) -> bool:
    rs = build_root_system(type_label, rank)
    for descriptor in max_regular_reductive(rs):
        node = int(descriptor.note.split("=")[1])
        if (not is_closed_symmetric(rs, pi_system_roots(rs, node, descriptor.provenance))):
            return False
    return True

def compute_levi_dim(type_label: str, rank: int, node: int) -> int:
    return levi_factor(type_label, rank, node).dim

def compute_levi_rank(type_label: str, rank: int, node: int) -> list[int]:
    descriptor = levi_factor(type_label, rank, node)
    return [descriptor.semisimple_rank, descriptor.center]

def compute_irrep_dim(type_label: str, rank: int, weight: tuple[int, ...]) -> int:
    return weyl_dim(build_root_system(type_label, rank), weight)

def compute_dual_dim(type_label: str, rank: int, weight: tuple[int, ...]) -> int:
    rs = build_root_system(type_label, rank)
    return weyl_dim(rs, duality(rs, weight))

def compute_rep_type(type_label: str, rank: int, weight: tuple[int, ...]) -> str:
    return rep_type(build_root_system(type_label, rank), weight).value

def parity_rep_type(type_label: str, rank: int, weight: tuple[int, ...]) -> str:
    """The self-duality type from <lambda, 2 rho^vee> mod 2, independent of the parity table."""
    rs = build_root_system(type_label, rank)
    if (duality(rs, weight) != tuple(weight)):
        return RepType.NOT_SELF_DUAL.value
    return (RepType.SYMPLECTIC if (coroot_parity(rs, weight)) else RepType.ORTHOGONAL).value

def compute_real_form_rows(ell: int) -> list[list[str]]:
    return sorted([row.ambient.label, row.subalgebra.label] for row in enumerate_real_forms(ell).rows)

def compute_real_form_count(ell: int) -> int:
    return len(enumerate_real_forms(ell).rows)

def compute_lorentzian_verdict(ell: int) -> bool:
    return enumerate_real_forms(ell).lorentzian

def compute_surrogate() -> list[bool]:
    return [check.matches for check in enumerate_real_forms(4).surrogate]

def compute_family_a_ambients(ell: int) -> list[str]:
    return [ambient_real_form(involution_family(ell, "a", p=p, q=ell - p)).label for p in range(ell, -1, -1)]

def compute_real_form_dims(ell: int) -> list[int]:
    """Real dimension of the sigma-fixed points of so(2l, C), per family."""
    ambient = construct_subalgebra("so-complex", ell=ell)
    out = []
    for family, params in family_parameters(ell):
        theta = involution_family(ell, family, **params)
        out.append(real_points(ambient, lambda y, theta=theta: anti_involution(theta, y)).dim)
    return out

def compute_sl3_reconstruction() -> list[Any]:
    """[centralizer dim, whether sl(3) plus its centralizer is gl(3)] inside so(6, C)."""
    sl3 = construct_subalgebra("sl", ell=3)
    gl3 = construct_subalgebra("gl", ell=3)
    z = centralizer(sl3, construct_subalgebra("so-complex", ell=3))
    joined = Span([vectorize(b) for b in sl3.basis + z.basis], 36, sl3.domain, require_independent=False)
    spans = joined.dim == gl3.dim and all(joined.contains(v) for v in gl3.vectors)
    return [z.dim, spans]

def _check(name: str, params: dict, expected: Any, provenance: Provenance,
           compute: Callable[..., Any], oracle: Optional[str] = None, **kwargs) -> Check:
    return Check(name, params, expected, provenance, compute, kwargs, oracle)

# retained dimensions of admissible_report(n), largest first
RETAINED_DIMS = {
    5: [6, 4, 4],
    6: [10, 9],
    7: [15, 11],
    8: [21, 16],
    9: [28, 22],
    10: [36, 29],
}

WEYL_ORACLE = "kernel of the Bianchi and trace constraints"

def check_n(n: int, max_n: int = C.DEFAULT_MAX_N, low: int = C.MIN_WEYL_N) -> None:
    """Reject n below the supported range and warn above the configured cap.

    Raises:
        InvalidParameterError:
            If n < low.
    """
    if (n < low):
        raise InvalidParameterError(f"n must be at least {low}, got {n}")
    if (n > max_n):
        logger.warning(f"n = {n} exceeds the configured max_n of {max_n}; this may take a long time")

def riemannian_checks(n: int, max_n: int = C.DEFAULT_MAX_N, cap: int = C.DEFAULT_CENSUS_CAP) -> list[Check]:
    """Riemannian chain: bounds, the admissible census, branching counts and stabilizers."""
    check_n(n, max_n)
    P = Provenance
    p = {"n": n}
    c0 = (n * n) // 4 if (n in (4, 6)) else math.comb(n - 2, 2) + 1
    checks = [
        _check("weyl-space-dim", {**p, "signature": f"{n},0"}, weyl_dim_formula(n), P.DERIVED,
               compute_weyl_dim, WEYL_ORACLE, kind="diagonal", n=n),
        _check("riemannian-c0", p, c0, P.PAPER, compute_c0, n=n, case=BoundCase.RIEMANNIAN.value),
    ]
    if (C.MIN_CENSUS_N <= n <= cap):
        if (n in RETAINED_DIMS):
            checks.append(_check("admissible-retained-dims", p, RETAINED_DIMS[n], P.PAPER,
                                 compute_retained_dims, n=n, cap=cap))
        checks.append(_check("admissible-gap", p, 0, P.PAPER, compute_gap_members, n=n, cap=cap))
        if (n == 8):
            checks.append(_check("rejected-sp2xsp4", p, 13, P.PAPER, compute_rejected_dim,
                                 n=n, cap=cap, label="sp(2)xsp(4)"))
    if (n >= 5):
        checks += [
            _check("fixed-so(n-1)", p, 0, P.PAPER, compute_block_fixed_dim, n=n, sizes=(n - 1, 1)),
            _check("fixed-so(n-2)", p, 1, P.PAPER, compute_block_fixed_dim, n=n, sizes=(n - 2, 1, 1)),
        ]
        if (n == 6):
            checks.append(_check("co-riem1-contains-block", p, True, P.PAPER, compute_co_contains_block, n=n))
        else:
            checks += [
                _check("co-riem1-dim", p, math.comb(n - 2, 2) + 1, P.PAPER, compute_co_dim, kind="riem1", n=n),
                _check("co-riem1-is-block", p, True, P.PAPER, compute_co_equals, kind="riem1", n=n, sub="block"),
            ]
    if (n % 2 == 0):
        ell = n // 2
        checks += [
            _check("u-invariant-lines", {"l": ell}, [1, True], P.PAPER, compute_line_count, kind="u", ell=ell),
            _check("co-riem2-dim", {"l": ell}, ell * ell, P.PAPER, compute_co_dim, kind="riem2", n=n),
        ]
        if (ell <= 4):
            checks.append(_check("co-riem2-is-u", {"l": ell}, True, P.PAPER,
                                 compute_co_equals, kind="riem2", n=n, sub="u"))
    if (n == 7):
        checks.append(_check("fixed-g2", p, 0, P.PAPER, compute_g2_fixed_dim))
    return checks

def lorentzian_checks(n: int, max_n: int = C.DEFAULT_MAX_N) -> list[Check]:
    """Lorentzian chain: the p1 analysis, the s(n) line and the candidate exclusions."""
    check_n(n, max_n)
    P = Provenance
    p = {"n": n}
    c0 = math.comb(n - 2, 2) + 2
    checks = [
        _check("weyl-space-dim", {**p, "signature": f"{n - 1},1"}, weyl_dim_formula(n), P.DERIVED,
               compute_weyl_dim, WEYL_ORACLE, kind="lightcone", n=n),
        _check("lorentzian-c0", p, c0, P.PAPER, compute_c0, n=n, case=BoundCase.LORENTZIAN.value),
        _check("co-lor-dim", p, c0, P.PAPER, compute_co_dim, kind="lor", n=n),
        _check("co-lor-is-s", p, True, P.PAPER, compute_co_equals, kind="lor", n=n, sub="s"),
        _check("s-stabilizes-plane", p, [True, 1], P.PAPER, compute_stabilizes, kind="s", n=n),
        _check("grading-scales-lor", p, True, P.PAPER, compute_grading_scales_lor, n=n),
        _check("lor-in-s-lines", p, True, P.PAPER, compute_lor_in_lines, n=n),
    ]
    if (n == 4):
        oracle = "invariant_lines(s(4), W(1,3))"
        checks += [
            _check("s-invariant-lines", p, [2, True], P.DERIVED, compute_line_count, oracle, kind="s", n=n),
            _check("s-line-eigenvalues", p, ["2", "2"], P.DERIVED, compute_line_eigenvalues, oracle, kind="s", n=n),
        ]
        return checks

    checks += [
        _check("s-invariant-lines", p, [1, True], P.PAPER, compute_line_count, kind="s", n=n),
        _check("fixed-r1", p, (n - 1) * (n - 2) // 2 - 1, P.PAPER, compute_r1_fixed_dim, n=n),
        _check("so-r1-invariant-lines", p, [0, True], P.PAPER, compute_line_count, kind="so-r1", n=n),
        _check("co-so(n-2)-contains-so(n-2)", p, True, P.PAPER,
               compute_so_n_minus_2_contains, n=n, part="rotations"),
        _check("co-so(n-2)-contains-r1", p, False, P.PAPER, compute_so_n_minus_2_contains, n=n, part="r1"),
    ]
    if (n == 6):
        checks.append(_check("so3-R-r1-invariant-lines", p, [0, True], P.PAPER, compute_so3r_r1_lines))
        for kind in ("n6-graded", "n6-rotated", "n6-full"):
            for mirror in (False, True):
                checks.append(_check(f"{kind}-invariant-lines", {**p, "mirror": mirror}, [0, True], P.PAPER,
                                     compute_line_count, kind=kind, n=n, mirror=mirror))
    return checks

def other_signature_checks(n: int, max_n: int = C.DEFAULT_MAX_N) -> list[Check]:
    """The null-plane tensor in signature (n-2, 2)."""
    check_n(n, max_n)
    P = Provenance
    p = {"n": n, "signature": f"{n - 2},2"}
    return [
        _check("weyl-space-dim", p, weyl_dim_formula(n), P.DERIVED, compute_weyl_dim, WEYL_ORACLE,
               kind="null-plane", n=n),
        _check("other-signature-c0", p, math.comb(n - 2, 2) + 4, P.PAPER, compute_c0,
               n=n, case=BoundCase.OTHER_SIGNATURE.value),
        _check("co-null-plane-dim", p, math.comb(n - 2, 2) + 4, P.PAPER, compute_co_dim, kind="null-plane", n=n),
        _check("co-null-plane-is-p2", p, True, P.PAPER, compute_co_equals, kind="null-plane", n=n, sub="p2"),
        _check("p2-stabilizes-null-plane", p, [True, 0], P.PAPER, compute_stabilizes, kind="p2", n=n),
    ]

def regular_table(series: str, rank: int) -> Optional[list[str]]:
    """Type labels of the maximal regular reductive subalgebras from the closed-form tables, in node order."""
    build = SubalgebraDescriptor.build
    prov = SubalgebraProvenance
    if (series == "B"):
        out = [build([("so", 2 * rank - 1)], 1, prov.PI_SYSTEM_I)]
        out += [build([("so", 2 * k), ("so", 2 * rank - 2 * k + 1)], 0, prov.PI_SYSTEM_II)
                for k in range(2, rank + 1)]
    elif (series == "D"):
        out = [build([("so", 2 * rank - 2)], 1, prov.PI_SYSTEM_I)]
        out += [build([("so", 2 * k), ("so", 2 * rank - 2 * k)], 0, prov.PI_SYSTEM_II)
                for k in range(2, rank - 1)]
        out += [build([("A", rank - 1)], 1, prov.PI_SYSTEM_I)] * 2
    elif (series == "G2"):
        return ["A2", "A1xA1"]
    else:
        return None
    return [d.type_label for d in out]

def regular_checks(type_label: str, rank: Optional[int]) -> list[Check]:
    series, rank = normalize_type(type_label, rank)
    rs = build_root_system(series, rank)
    if (rs.highest_root is None):
        raise InvalidParameterError(f"{rs.label} is not simple")
    P = Provenance
    p = {"type": series, "rank": rank}
    checks = []
    expected = regular_table(series, rank)
    if (expected is not None):
        checks.append(_check("regular-labels", p, expected, P.PAPER, compute_regular_labels,
                             type_label=series, rank=rank))

    # type I keeps rank l - 1 with a center; type II keeps rank l at prime coefficients
    shape = []
    for coeff in rs.highest_root:
        if (coeff == 1):
            shape.append([rank - 1, 1])
        elif (coeff in (2, 3, 5)):
            shape.append([rank, 0])
    checks += [
        _check("regular-ranks", p, shape, P.PAPER, compute_regular_ranks, type_label=series, rank=rank),
        _check("regular-closed", p, True, P.PAPER, compute_regular_closed, type_label=series, rank=rank),
    ]
    return checks

def levi_checks(type_label: str, rank: Optional[int], node: Optional[int] = None) -> list[Check]:
    series, rank = normalize_type(type_label, rank)
    P = Provenance
    nodes = [node] if (node is not None) else list(range(1, rank + 1))
    checks = []
    for k in nodes:
        if (not 1 <= k <= rank):
            raise InvalidParameterError(f"Node {k} is out of range for {series}{rank}")
        p = {"type": series, "rank": rank, "cross": k}
        if (series in ("B", "D")):
            checks.append(_check("levi-dim", p, levi_table_dim(series, rank, k), P.PAPER,
                                 compute_levi_dim, type_label=series, rank=rank, node=k))
        else:
            checks.append(_check("levi-rank", p, [rank - 1, 1], P.TRIVIAL, compute_levi_rank,
                                 type_label=series, rank=rank, node=k))
    return checks

def fundamental_dim(series: str, rank: int, k: int) -> Optional[int]:
    """Closed-form dimension of the k-th fundamental irrep of a classical type."""
    ell = rank
    if (series == "A"):
        return math.comb(ell + 1, k)
    if (series == "B"):
        return 2 ** ell if (k == ell) else math.comb(2 * ell + 1, k)
    if (series == "C"):
        return (2 * ell - 2 * k + 2) * math.comb(2 * ell + 1, k) // (2 * ell - k + 2)
    if (series == "D"):
        return 2 ** (ell - 1) if (k >= ell - 1) else math.comb(2 * ell, k)
    return None

EXCEPTIONAL_FUNDAMENTALS = {
    ("G2", 1): 7,
    ("G2", 2): 14,
    ("F4", 1): 52,
    ("F4", 4): 26,
    ("E6", 1): 27,
    ("E7", 7): 56,
    ("E8", 8): 248,
}

def _weight_param(weight: tuple[int, ...]) -> str:
    return ",".join(str(r) for r in weight)

def irrep_dim_checks(type_label: str, rank: Optional[int], weight: list[int]) -> list[Check]:
    series, rank = normalize_type(type_label, rank)
    weight = check_weight(build_root_system(series, rank), weight)
    P = Provenance
    p = {"type": series, "rank": rank, "weight": _weight_param(weight)}
    checks = []
    if (sum(weight) == 0):
        checks.append(_check("irrep-dim", p, 1, P.TRIVIAL, compute_irrep_dim,
                             type_label=series, rank=rank, weight=weight))
    elif (sum(weight) == 1):
        k = weight.index(1) + 1
        expected = fundamental_dim(series, rank, k)
        if (expected is None):
            expected = EXCEPTIONAL_FUNDAMENTALS.get((series, k))
        if (expected is not None):
            checks.append(_check("irrep-dim", p, expected, P.PAPER, compute_irrep_dim,
                                 type_label=series, rank=rank, weight=weight))
    # the dual irrep has the same dimension
    checks.append(_check("irrep-dim-dual", p, compute_irrep_dim(series, rank, weight), P.DERIVED,
                         compute_dual_dim, "weyl_dim at -w0(lambda)", type_label=series, rank=rank, weight=weight))
    return checks

def _fundamental(rank: int, k: int) -> tuple[int, ...]:
    return tuple(1 if (i == k - 1) else 0 for i in range(rank))

def listed_rep_types() -> dict[tuple[str, int, tuple[int, ...]], RepType]:
    """Self-duality types quoted for specific fundamental irreps."""
    listed = {
        ("B", 3, _fundamental(3, 3)): RepType.ORTHOGONAL,
        ("B", 4, _fundamental(4, 4)): RepType.ORTHOGONAL,
        ("G2", 2, _fundamental(2, 1)): RepType.ORTHOGONAL,
        ("F4", 4, _fundamental(4, 4)): RepType.ORTHOGONAL,
        ("C", 3, _fundamental(3, 3)): RepType.SYMPLECTIC,
        ("D", 6, _fundamental(6, 5)): RepType.SYMPLECTIC,
        ("D", 6, _fundamental(6, 6)): RepType.SYMPLECTIC,
    }
    for ell in range(3, 9):
        listed[("C", ell, _fundamental(ell, 2))] = RepType.ORTHOGONAL
    for ell in (5, 7):
        listed[("D", ell, _fundamental(ell, ell - 1))] = RepType.NOT_SELF_DUAL
        listed[("D", ell, _fundamental(ell, ell))] = RepType.NOT_SELF_DUAL
    return listed

def rep_type_checks(type_label: str, rank: Optional[int], weight: list[int]) -> list[Check]:
    series, rank = normalize_type(type_label, rank)
    weight = check_weight(build_root_system(series, rank), weight)
    P = Provenance
    p = {"type": series, "rank": rank, "weight": _weight_param(weight)}
    checks = []
    listed = listed_rep_types().get((series, rank, weight))
    if (listed is not None):
        checks.append(_check("rep-type", p, listed.value, P.PAPER, compute_rep_type,
                             type_label=series, rank=rank, weight=weight))
    checks.append(_check("rep-type-parity", p, parity_rep_type(series, rank, weight), P.DERIVED,
                         compute_rep_type, "<lambda, 2 rho^vee> mod 2 after the duality test",
                         type_label=series, rank=rank, weight=weight))
    return checks

def stabilizer_checks(kind: str, n: int, signature: Optional[tuple[int, int]] = None,
                      max_n: int = C.DEFAULT_MAX_N) -> list[Check]:
    """co_stabilizer of one named tensor.

    Raises:
        InvalidParameterError:
            If the kind is unknown, or the signature does not match the tensor's metric.
    """
    try:
        kind = TensorKind(kind)
    except (ValueError):
        raise InvalidParameterError(f"Unknown tensor kind: {kind!r}")
    check_n(n, max_n)
    form = tensor_form(kind, n)
    if (signature is not None and tuple(signature) != form.signature):
        raise InvalidParameterError(f"{kind.value} lives in signature {form.signature}, got {tuple(signature)}")

    P = Provenance
    p = {"tensor": kind.value, "n": n}
    if (kind == TensorKind.NULL_PLANE):
        return [_check("co-dim", p, math.comb(n - 2, 2) + 4, P.PAPER, compute_co_dim, kind=kind.value, n=n)]
    if (kind == TensorKind.RIEM1):
        if (n == 6):
            return [_check("co-contains-block", p, True, P.PAPER, compute_co_contains_block, n=n)]
        return [_check("co-dim", p, math.comb(n - 2, 2) + 1, P.PAPER, compute_co_dim, kind=kind.value, n=n)]
    if (kind == TensorKind.RIEM2):
        if (n % 2):
            raise InvalidParameterError(f"riem2 needs an even n, got {n}")
        return [_check("co-dim", p, (n // 2) ** 2, P.PAPER, compute_co_dim, kind=kind.value, n=n)]
    if (kind == TensorKind.LOR):
        return [_check("co-dim", p, math.comb(n - 2, 2) + 2, P.PAPER, compute_co_dim, kind=kind.value, n=n)]
    return [
        _check("co-contains-so(n-2)", p, True, P.PAPER, compute_so_n_minus_2_contains, n=n, part="rotations"),
        _check("co-contains-r1", p, False, P.PAPER, compute_so_n_minus_2_contains, n=n, part="r1"),
    ]

# (ambient, subalgebra) pairs of the printed tables, sorted
REAL_FORM_TABLES = {
    2: sorted([
        ["so(4)", "u(2)"], ["so(2,2)", "u(1,1)"], ["u*(2,H)", "u(2)"], ["u*(2,H)", "u(1,1)"],
        ["so(2,2)", "gl(2,R)"], ["u*(2,H)", "gl(1,H)"],
    ]),
    3: sorted([
        ["so(6)", "u(3)"], ["so(2,4)", "u(1,2)"], ["u*(3,H)", "u(3)"], ["u*(3,H)", "u(1,2)"],
        ["so(3,3)", "gl(3,R)"],
    ]),
}

def real_form_pair_count(ell: int) -> int:
    """Distinct pairs: a and b each give floor(l/2) + 1, then c, then d for even l."""
    return 2 * (ell // 2 + 1) + 1 + (1 if (ell % 2 == 0) else 0)

def real_form_checks(ell: int) -> list[Check]:
    if (ell < 2):
        raise InvalidParameterError(f"Real-form tables need l >= 2, got {ell}")
    P = Provenance
    p = {"l": ell}
    checks = []
    if (ell in REAL_FORM_TABLES):
        checks.append(_check("real-form-pairs", p, REAL_FORM_TABLES[ell], P.PAPER, compute_real_form_rows, ell=ell))
    checks += [
        _check("real-form-count", p, real_form_pair_count(ell), P.DERIVED, compute_real_form_count,
               "enumerate_real_forms deduplicated by (ambient, invariants)", ell=ell),
        _check("lorentzian-verdict", p, ell == 4, P.PAPER, compute_lorentzian_verdict, ell=ell),
        _check("family-a-ambients", p, [orthogonal_label(2 * q, 2 * (ell - q)) for q in range(ell, -1, -1)],
               P.PAPER, compute_family_a_ambients, ell=ell),
        _check("real-form-dims", p, [math.comb(2 * ell, 2)] * len(family_parameters(ell)), P.TRIVIAL,
               compute_real_form_dims, ell=ell),
    ]
    if (ell == 4):
        checks.append(_check("lorentzian-surrogate", p, [True, True], P.PAPER, compute_surrogate))
    if (ell == 3):
        checks.append(_check("sl3-centralizer", p, [1, True], P.PAPER, compute_sl3_reconstruction))
    return checks

def all_checks(max_n: int = C.DEFAULT_MAX_N, cap: int = C.DEFAULT_CENSUS_CAP) -> list[Check]:
    """The full acceptance suite for 4 <= n <= max_n."""
    checks = []
    for n in range(C.MIN_WEYL_N, max_n + 1):
        checks += riemannian_checks(n, max_n, cap)
        checks += lorentzian_checks(n, max_n)
    for n in range(C.MIN_WEYL_N, min(9, max_n) + 1):
        checks += other_signature_checks(n, max_n)
    for rank in range(2, 9):
        checks += regular_checks("B", rank) + levi_checks("B", rank)
    for rank in range(3, 9):
        checks += regular_checks("D", rank) + levi_checks("D", rank)
    checks += regular_checks("G2", 2)
    for series, ranks in (("A", range(1, 9)), ("B", range(2, 9)), ("C", range(3, 9)), ("D", range(4, 9))):
        for rank in ranks:
            for k in range(1, rank + 1):
                checks += irrep_dim_checks(series, rank, list(_fundamental(rank, k)))
    for series, rank in (("G2", 2), ("F4", 4)):
        for k in range(1, rank + 1):
            if ((series, k) in EXCEPTIONAL_FUNDAMENTALS):
                checks += irrep_dim_checks(series, rank, list(_fundamental(rank, k)))
    for series, rank, weight in listed_rep_types():
        checks += rep_type_checks(series, rank, list(weight))
    for ell in range(2, max(6, max_n // 2) + 1):
        checks += real_form_checks(ell)
    return checks

__all__ = [
    "Suite",
    "Check",
    "json_safe",
    "run_check",
    "RETAINED_DIMS",
    "check_n",
    "riemannian_checks",
    "lorentzian_checks",
    "other_signature_checks",
    "regular_table",
    "regular_checks",
    "levi_checks",
    "fundamental_dim",
    "EXCEPTIONAL_FUNDAMENTALS",
    "irrep_dim_checks",
    "listed_rep_types",
    "parity_rep_type",
    "rep_type_checks",
    "stabilizer_checks",
    "REAL_FORM_TABLES",
    "real_form_pair_count",
    "real_form_checks",
    "all_checks"
]
