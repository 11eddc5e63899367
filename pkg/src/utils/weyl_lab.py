# import Python's standard libraries
import re
import enum
import math
import functools
import itertools
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional, Sequence

# import third-party libraries
import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

# import local files
if (__package__ is None or __package__ == ""):
    from exact import (
        SparseVector, Span, as_scalar, from_dok, from_rows, from_columns, columns, kernel,
        kernel_vectors, apply, vector_add, vector_scale, common_rational_eigenlines
    )
    from mat_lie import (
        MetricForm, MatrixLieAlgebra, construct_subalgebra, derived, lie_generators, vectorize
    )
    from errors import (
        InvalidParameterError, DimensionMismatchError, NotWeylError, TensorFormatError
    )
    from constants import CONSTANTS as C
    from logger import logger
else:
    from .exact import (
        SparseVector, Span, as_scalar, from_dok, from_rows, from_columns, columns, kernel,
        kernel_vectors, apply, vector_add, vector_scale, common_rational_eigenlines
    )
    from .mat_lie import (
        MetricForm, MatrixLieAlgebra, construct_subalgebra, derived, lie_generators, vectorize
    )
    from .errors import (
        InvalidParameterError, DimensionMismatchError, NotWeylError, TensorFormatError
    )
    from .constants import CONSTANTS as C
    from .logger import logger

Pair = tuple[int, int]

@functools.lru_cache(maxsize=None)
def pairs_of(n: int) -> tuple[tuple[Pair, ...], dict[Pair, int]]:
    """Ordered pairs i < j in lexicographic order, with their positions."""
    pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return pairs, {p: k for k, p in enumerate(pairs)}

@functools.lru_cache(maxsize=None)
def sym_pairs_of(n: int) -> tuple[tuple[int, int], ...]:
    """Positions (p, q), p <= q, of the basis w^P . w^Q of the symmetric square, in order."""
    count = math.comb(n, 2)
    return tuple((p, q) for p in range(count) for q in range(p, count))

def sym_index(p: int, q: int, count: int) -> int:
    if (p > q):
        p, q = q, p
    return p * count - p * (p - 1) // 2 + (q - p)

def sym_length(n: int) -> int:
    count = math.comb(n, 2)
    return count * (count + 1) // 2

def weyl_dim_formula(n: int) -> int:
    return n * (n + 1) * (n + 2) * (n - 3) // 12

def _sign(a: int, b: int) -> int:
    return 1 if (a < b) else -1

@dataclass(frozen=True)
class TensorW:
    """An element of the symmetric square of 2-forms on R^n.

    coeffs maps the position of w^P . w^Q (P <= Q) to its coefficient c,
    so the tensor is sum c_{PQ} w^P . w^Q with (w^P)^2 for P = Q. Under the
    projector conventions the component R_{abcd} is s_ab s_cd M_{PQ} / 4,
    where M_PP = c_PP and M_PQ = c_PQ / 2.
    """
    n: int
    coeffs: dict[int, Any] = field(default_factory=dict, hash=False, compare=True)

    @property
    def vector(self) -> SparseVector:
        return self.coeffs

    def coefficient(self, first: Pair, second: Pair) -> Any:
        _, index = pairs_of(self.n)
        count = len(index)
        return self.coeffs.get(sym_index(index[first], index[second], count), QQ(0))

    def component(self, a: int, b: int, c: int, d: int) -> Any:
        """R_abcd."""
        if (a == b or c == d):
            return QQ(0)
        first, second = tuple(sorted((a, b))), tuple(sorted((c, d)))
        value = self.coefficient(first, second)
        if (first != second):
            value = value / 2
        return _sign(a, b) * _sign(c, d) * value / 4

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TensorW") -> "TensorW":
        if (self.n != other.n):
            raise DimensionMismatchError(f"Tensors on R^{self.n} and R^{other.n}")
        return TensorW(self.n, vector_add(self.coeffs, other.coeffs))

    def scale(self, factor: Any) -> "TensorW":
        return TensorW(self.n, vector_scale(self.coeffs, as_scalar(factor)))

    def __str__(self) -> str:
        pairs, _ = pairs_of(self.n)
        sym = sym_pairs_of(self.n)
        terms = []
        for k in sorted(self.coeffs):
            p, q = sym[k]
            terms.append(f"{self.coeffs[k]}*w{pairs[p]}.w{pairs[q]}")
        return " + ".join(terms) if (terms) else "0"

def _tensor_from_coefficients(n: int, values: dict[tuple[Pair, Pair], Any]) -> TensorW:
    _, index = pairs_of(n)
    count = len(index)
    coeffs = {}
    for (first, second), value in values.items():
        k = sym_index(index[first], index[second], count)
        total = coeffs.get(k, QQ(0)) + as_scalar(value)
        if (total):
            coeffs[k] = total
        else:
            coeffs.pop(k, None)
    return TensorW(n, coeffs)

class Constraint(NamedTuple):
    label: str
    row: SparseVector

@functools.lru_cache(maxsize=None)
def _bianchi_constraints(n: int) -> tuple[Constraint, ...]:
    """c_{ab,cd} - c_{ac,bd} + c_{ad,bc} = 0 for a < b < c < d."""
    _, index = pairs_of(n)
    count = len(index)
    out = []
    for a, b, c, d in itertools.combinations(range(n), 4):
        row = {
            sym_index(index[(a, b)], index[(c, d)], count): QQ(1),
            sym_index(index[(a, c)], index[(b, d)], count): QQ(-1),
            sym_index(index[(a, d)], index[(b, c)], count): QQ(1),
        }
        out.append(Constraint(f"bianchi {a},{b},{c},{d}", row))
    return tuple(out)

def _trace_constraints(form: MetricForm) -> tuple[Constraint, ...]:
    """g^{ac} R_{abcd} = 0 for b <= d, up to the common factor 1/4."""
    n = form.n
    _, index = pairs_of(n)
    count = len(index)
    inverse = form.inverse.to_sparse().to_dok()
    out = []
    for b in range(n):
        for d in range(b, n):
            row: SparseVector = {}
            for (a, c), g in inverse.items():
                if (not g or a == b or c == d):
                    continue
                first, second = tuple(sorted((a, b))), tuple(sorted((c, d)))
                weight = QQ(1) if (first == second) else QQ(1, 2)
                k = sym_index(index[first], index[second], count)
                row = vector_add(row, {k: g * weight * _sign(a, b) * _sign(c, d)})
            if (row):
                out.append(Constraint(f"trace {b},{d}", row))
    return tuple(out)

class WeylCheck(NamedTuple):
    ok: bool
    violations: list[str]

def is_weyl(phi: TensorW, form: MetricForm) -> WeylCheck:
    """Check the Bianchi identity and trace-freeness exactly.

    The pair symmetries hold by construction of TensorW.
    """
    if (phi.n != form.n):
        raise DimensionMismatchError(f"Tensor on R^{phi.n} with a form on R^{form.n}")
    violations = []
    for constraint in _bianchi_constraints(phi.n) + _trace_constraints(form):
        value = sum((v * phi.coeffs[k] for k, v in constraint.row.items() if (k in phi.coeffs)), QQ(0))
        if (value):
            violations.append(constraint.label)
    return WeylCheck(ok=not violations, violations=violations)

class WeylSpace:
    """The algebraic Weyl tensors of a metric form, with a reduced echelon basis.

    Attributes:
        form (MetricForm):
            The metric.
        basis (DomainMatrix):
            A sym_length(n) x dim matrix whose columns span the space.
    """
    def __init__(self, form: MetricForm) -> None:
        n = form.n
        if (n < C.MIN_WEYL_N):
            raise InvalidParameterError(f"Weyl tensors need n >= {C.MIN_WEYL_N}, got {n}")
        if (n > C.DEFAULT_MAX_N):
            logger.warning(f"Building W({n}) above the default cap of {C.DEFAULT_MAX_N}")
        self.form = form
        self.n = n
        self.length = sym_length(n)
        rows = [c.row for c in _bianchi_constraints(n) + _trace_constraints(form)]
        self.basis = kernel(from_rows(rows, self.length, QQ))
        logger.info(f"Built W({n}) for {form!r}: dimension {self.dim}")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @functools.cached_property
    def span(self) -> Span:
        return Span(columns(self.basis), self.length, QQ)

    def tensors(self) -> list[TensorW]:
        return [TensorW(self.n, v) for v in columns(self.basis)]

    def contains(self, phi: TensorW) -> bool:
        return self.span.contains(phi.coeffs)

    def __repr__(self) -> str:
        return f"WeylSpace<n={self.n}, dim={self.dim}, {self.form.convention.value}>"

@functools.lru_cache(maxsize=C.WEYL_SPACE_CACHE_SIZE)
def weyl_space(form: MetricForm) -> WeylSpace:
    """The cached Weyl space of a form; equal forms share one entry."""
    return WeylSpace(form)

def _wedge_action(x: DomainMatrix, n: int) -> list[SparseVector]:
    """Columns of the induced action on 2-forms, with X.w^a = -sum_b X[a][b] w^b."""
    pairs, index = pairs_of(n)
    rows_of_x = x.to_sparse().to_dod()
    out = []
    for s, t in pairs:
        col: SparseVector = {}
        for b, v in rows_of_x.get(s, {}).items():
            if (b != t):
                col = vector_add(col, {index[tuple(sorted((b, t)))]: -v * _sign(b, t)})
        for b, v in rows_of_x.get(t, {}).items():
            if (b != s):
                col = vector_add(col, {index[tuple(sorted((s, b)))]: -v * _sign(s, b)})
        out.append(col)
    return out

def action_matrix(x: DomainMatrix, n: int) -> DomainMatrix:
    """The action of an n x n matrix on the symmetric square of 2-forms."""
    if (x.shape != (n, n)):
        raise DimensionMismatchError(f"Matrix of shape {x.shape} acting on tensors over R^{n}")
    x = x.convert_to(QQ) if (x.domain != QQ) else x
    wedge = _wedge_action(x, n)
    count = len(wedge)
    dok: dict[tuple[int, int], Any] = {}
    for col, (p, q) in enumerate(sym_pairs_of(n)):
        for source, other in ((p, q), (q, p)):
            for r, value in wedge[source].items():
                key = (sym_index(r, other, count), col)
                dok[key] = dok.get(key, QQ(0)) + value
    return from_dok(dok, (sym_length(n), sym_length(n)), QQ)

def act(x: DomainMatrix, phi: TensorW) -> TensorW:
    """X.phi for the derivation action on covariant tensors."""
    return TensorW(phi.n, apply(action_matrix(x, phi.n), phi.coeffs))

def _check_forms(alg: MatrixLieAlgebra, space: WeylSpace) -> None:
    if (alg.form is None or alg.form != space.form):
        raise DimensionMismatchError(
            f"{alg.name or 'algebra'} preserves {alg.form!r}, but the Weyl space uses {space.form!r}"
        )

def fixed_space(alg: MatrixLieAlgebra, space: WeylSpace) -> DomainMatrix:
    """Basis (as columns) of the tensors in the Weyl space killed by every element of alg.

    Generators are applied one at a time, each cutting the current subspace by a kernel.
    """
    _check_forms(alg, space)
    current = space.basis
    for generator in lie_generators(alg):
        if (current.shape[1] == 0):
            break
        image = action_matrix(generator, space.n).matmul(current)
        current = current.matmul(kernel(image)).to_sparse()
    return current

class InvariantLine(NamedTuple):
    tensor: TensorW
    eigenvalues: tuple

class InvariantLines(NamedTuple):
    lines: list[InvariantLine]
    complete: bool
    fixed_dim: int

def invariant_lines(alg: MatrixLieAlgebra, space: WeylSpace) -> InvariantLines:
    """Weyl lines preserved up to scale by alg.

    The derived algebra must kill such a line, so the search runs inside its
    fixed space, where the remaining basis elements commute.
    """
    _check_forms(alg, space)
    ideal = derived(alg)
    fixed = fixed_space(ideal, space) if (ideal.dim) else space.basis

    span_vectors = list(ideal.vectors)
    family = []
    for b in alg.basis:
        v = vectorize(b)
        if (not Span(span_vectors, alg.n * alg.n, alg.domain, require_independent=False).contains(v)):
            family.append(b)
            span_vectors.append(v)
    logger.debug(f"{alg.name}: derived dim {ideal.dim}, fixed dim {fixed.shape[1]}, {len(family)} abelian generators")

    result = common_rational_eigenlines([action_matrix(b, space.n) for b in family], fixed)
    lines = [InvariantLine(TensorW(space.n, line.vector), line.eigenvalues) for line in result.lines]
    return InvariantLines(lines=lines, complete=result.complete, fixed_dim=fixed.shape[1])

class Stabilizer(NamedTuple):
    algebra: MatrixLieAlgebra
    scales: list[Any]

def _check_tensor(phi: TensorW, ambient: MatrixLieAlgebra) -> None:
    if (phi.is_zero()):
        raise NotWeylError("The stabilizer of the zero tensor is not defined")
    if (ambient.form is None):
        raise DimensionMismatchError(f"{ambient.name or 'ambient'} carries no metric form")
    check = is_weyl(phi, ambient.form)
    if (not check.ok):
        raise NotWeylError(f"Tensor violates {len(check.violations)} constraints, first: {check.violations[0]}")

def co_stabilizer(phi: TensorW, ambient: MatrixLieAlgebra, scaled: bool = True) -> Stabilizer:
    """co(phi) = {X : X.phi = lambda phi}, solved as one system in (X, lambda).

    Args:
        phi (TensorW):
            A nonzero Weyl tensor.
        ambient (MatrixLieAlgebra):
            The ambient orthogonal algebra.
        scaled (bool, optional):
            False gives the annihilator, with lambda fixed at 0.

    Returns:
        Stabilizer:
            The algebra and the scale lambda of each basis element.

    Raises:
        NotWeylError:
            If phi is zero or not a Weyl tensor.
    """
    _check_tensor(phi, ambient)
    length = sym_length(phi.n)
    cols = [act(b, phi).coeffs for b in ambient.basis]
    if (scaled):
        cols.append(vector_scale(phi.coeffs, QQ(-1)))
    solutions = kernel_vectors(from_columns(cols, length, QQ))

    m = ambient.dim
    basis, scales = [], []
    for v in solutions:
        basis.append(ambient.from_coordinates({k: c for k, c in v.items() if (k < m)}))
        scales.append(v.get(m, QQ(0)))
    name = f"co({ambient.name})" if (scaled) else f"ann({ambient.name})"
    return Stabilizer(ambient.subalgebra(basis, name=name), scales)

def annihilator(phi: TensorW, ambient: MatrixLieAlgebra) -> MatrixLieAlgebra:
    return co_stabilizer(phi, ambient, scaled=False).algebra

@enum.unique
class TensorKind(str, enum.Enum):
    NULL_PLANE = "null-plane"
    RIEM1 = "riem1"
    RIEM2 = "riem2"
    LOR = "lor"
    SO_N_MINUS_2 = "so-n-minus-2"

MIN_TENSOR_N = {
    TensorKind.NULL_PLANE: 4,
    TensorKind.RIEM1: 5,
    TensorKind.RIEM2: 4,
    TensorKind.LOR: 4,
    TensorKind.SO_N_MINUS_2: 4,
}

def tensor_form(kind: str, n: int) -> MetricForm:
    """The metric in which a named tensor is a Weyl tensor."""
    kind = TensorKind(kind)
    if (kind in (TensorKind.RIEM1, TensorKind.RIEM2)):
        return MetricForm.diagonal(n)
    if (kind == TensorKind.NULL_PLANE):
        return MetricForm.null_plane(n)
    return MetricForm.lightcone(n)

def _wedge_components(a: int, b: int) -> dict[Pair, Any]:
    half = QQ(1, 2)
    return {(a, b): half, (b, a): -half}

def _sym_product(x: dict[Pair, Any], y: dict[Pair, Any]) -> dict[tuple[int, ...], Any]:
    out: dict[tuple[int, ...], Any] = {}
    half = QQ(1, 2)
    for (i, j), u in x.items():
        for (k, l), v in y.items():
            for key in ((i, j, k, l), (k, l, i, j)):
                out[key] = out.get(key, QQ(0)) + half * u * v
    return out

def _skew_last_three(t: dict[tuple[int, ...], Any], factor: Any) -> dict[tuple[int, ...], Any]:
    """factor * signed sum over the permutations of slots 2-4."""
    out: dict[tuple[int, ...], Any] = {}
    for (i, *rest), value in t.items():
        for order in itertools.permutations(range(3)):
            inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if (order[a] > order[b]))
            sign = -1 if (inversions % 2) else 1
            key = (i,) + tuple(rest[o] for o in order)
            out[key] = out.get(key, QQ(0)) + factor * sign * value
    return out

def _project_curvature(t: dict[tuple[int, ...], Any]) -> dict[tuple[int, ...], Any]:
    """Average over the eight pair symmetries of the symmetric square of 2-forms."""
    out: dict[tuple[int, ...], Any] = {}
    eighth = QQ(1, 8)
    for (a, b, c, d), value in t.items():
        for key, sign in (
            ((a, b, c, d), 1), ((b, a, c, d), -1), ((a, b, d, c), -1), ((b, a, d, c), 1),
            ((c, d, a, b), 1), ((d, c, a, b), -1), ((c, d, b, a), -1), ((d, c, b, a), 1),
        ):
            out[key] = out.get(key, QQ(0)) + eighth * sign * value
    return out

def tensor_from_components(n: int, components: dict[tuple[int, ...], Any]) -> TensorW:
    """Read a tensor with the pair symmetries from its components R_{ijkl}."""
    pairs, _ = pairs_of(n)
    values = {}
    for p, first in enumerate(pairs):
        for second in pairs[p:]:
            value = components.get(first + second, QQ(0))
            if (value):
                values[(first, second)] = 4 * value if (first == second) else 8 * value
    return _tensor_from_coefficients(n, values)

@enum.unique
class SkewReading(str, enum.Enum):
    """Normalizations of the skew-symmetrization over slots 2-4 in the third invariant."""
    PROJECTOR = "projector"   # 1/6 of the signed sum
    SUM = "sum"               # the signed sum

def riem2_invariants(ell: int, reading: str = SkewReading.PROJECTOR) -> tuple[TensorW, TensorW, TensorW]:
    """I_1, I_2 and I_3 on R^{2l} with the complex structure pairing a and a + l."""
    reading = SkewReading(reading)
    n = 2 * ell
    pairs, _ = pairs_of(n)
    i1 = _tensor_from_coefficients(n, {(p, p): 1 for p in pairs})

    kahler = [(a, a + ell) for a in range(ell)]
    i2_values = {}
    for x, first in enumerate(kahler):
        i2_values[(first, first)] = 1
        for second in kahler[x + 1:]:
            i2_values[(first, second)] = 2
    i2 = _tensor_from_coefficients(n, i2_values)

    raw: dict[tuple[int, ...], Any] = {}
    for a in range(ell):
        for b in range(a + 1, ell):
            product = _sym_product(_wedge_components(a, b), _wedge_components(a + ell, b + ell))
            for key, value in product.items():
                raw[key] = raw.get(key, QQ(0)) + value
    factor = QQ(1, 6) if (reading == SkewReading.PROJECTOR) else QQ(1)
    i3 = tensor_from_components(n, _project_curvature(_skew_last_three(raw, factor)))
    return i1, i2, i3

def _riem2(ell: int, reading: str = SkewReading.PROJECTOR) -> TensorW:
    i1, i2, i3 = riem2_invariants(ell, reading)
    return i1 + (i2 + i3.scale(2)).scale(-(2 * ell - 1))

def make_tensor(kind: str, n: Optional[int] = None, ell: Optional[int] = None) -> TensorW:
    """Build one of the named Weyl tensors.

    Args:
        kind (str):
            null-plane, riem1, riem2, lor or so-n-minus-2.
        n (int, optional):
            The dimension (riem2 also accepts it as 2l).
        ell (int, optional):
            The complex dimension for riem2.

    Returns:
        TensorW:
            The tensor with projector-normalized coefficients.

    Raises:
        InvalidParameterError:
            If the kind is unknown or the size is out of range.
    """
    try:
        kind = TensorKind(kind)
    except (ValueError):
        raise InvalidParameterError(f"Unknown tensor kind: {kind!r}")

    if (kind == TensorKind.RIEM2):
        if (ell is None):
            if (n is None or n % 2):
                raise InvalidParameterError(f"riem2 needs an even n or l, got n = {n}")
            ell = n // 2
        if (ell < 2):
            raise InvalidParameterError(f"riem2 needs l >= 2, got {ell}")
        return _riem2(ell)

    if (n is None or n < MIN_TENSOR_N[kind]):
        raise InvalidParameterError(f"{kind.value} needs n >= {MIN_TENSOR_N[kind]}, got {n}")

    values: dict[tuple[Pair, Pair], Any] = {}
    last = n - 1
    if (kind == TensorKind.NULL_PLANE):
        values[((0, 1), (0, 1))] = 1
    elif (kind == TensorKind.RIEM1):
        values[((0, 1), (0, 1))] = math.comb(n - 2, 2)
        for i in (0, 1):
            for a in range(2, n):
                values[((i, a), (i, a))] = QQ(-(n - 3), 2)
        for a in range(2, n):
            for b in range(a + 1, n):
                values[((a, b), (a, b))] = 1
    elif (kind == TensorKind.LOR):
        values[((1, last), (1, last))] = -(n - 3)
        for i in range(2, last):
            values[((i, last), (i, last))] = 1
    else:
        values[((0, last), (0, last))] = math.comb(n - 2, 2)
        for i in range(1, last):
            values[((0, i), (i, last))] = -(n - 3)
            for j in range(i + 1, last):
                values[((i, j), (i, j))] = -1
    return _tensor_from_coefficients(n, values)

class ReadingResult(NamedTuple):
    reading: SkewReading
    proportional: bool
    constant: Optional[Any]
    weyl: bool

def _proportionality(phi: TensorW, line: SparseVector) -> Optional[Any]:
    if (not line or not phi.coeffs):
        return None
    lead = min(line)
    ratio = phi.coeffs.get(lead, QQ(0)) / line[lead]
    if (ratio and vector_scale(line, ratio) == phi.coeffs):
        return ratio
    return None

def riem2_reading_report(ell: int) -> list[ReadingResult]:
    """Compare each reading of I_3 with the computed u(l)-fixed Weyl line.

    Raises:
        InvalidParameterError:
            If the u(l)-fixed space is not a line.
    """
    n = 2 * ell
    space = weyl_space(MetricForm.diagonal(n))
    fixed = fixed_space(construct_subalgebra("u", ell=ell), space)
    if (fixed.shape[1] != 1):
        raise InvalidParameterError(f"u({ell}) fixes a {fixed.shape[1]}-dimensional space, not a line")
    line = columns(fixed)[0]
    out = []
    for reading in SkewReading:
        phi = _riem2(ell, reading)
        ratio = _proportionality(phi, line)
        out.append(ReadingResult(
            reading=reading,
            proportional=ratio is not None,
            constant=ratio,
            weyl=is_weyl(phi, space.form).ok,
        ))
    return out

def format_rational(value: Any) -> str:
    """"num/den", or "num" for an integer."""
    value = QQ.convert(value)
    if (value.denominator == 1):
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

def export_tensor(phi: TensorW) -> str:
    """Lines "i j k l : value" of the components R_ijkl on canonical index quadruples."""
    pairs, _ = pairs_of(phi.n)
    sym = sym_pairs_of(phi.n)
    lines = [f"# n = {phi.n}"]
    for k in sorted(phi.coeffs):
        p, q = sym[k]
        (i, j), (a, b) = pairs[p], pairs[q]
        lines.append(f"{i} {j} {a} {b} : {format_rational(phi.component(i, j, a, b))}")
    return "\n".join(lines) + "\n"

_HEADER = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")
_LINE = re.compile(r"^(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*:\s*(\S+)$")

def import_tensor(text: str, n: Optional[int] = None) -> TensorW:
    """Parse the text format written by export_tensor.

    Blank lines and comments are skipped; a "# n = N" comment supplies n when not given.

    Raises:
        TensorFormatError:
            On a malformed line, a non-canonical or out-of-range quadruple,
            a repeated quadruple, or an unknown n.
    """
    entries_read: dict[tuple[Pair, Pair], Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if (not stripped):
            continue
        if (stripped.startswith("#")):
            header = _HEADER.match(stripped)
            if (header and n is None):
                n = int(header.group(1))
            continue
        match = _LINE.match(stripped)
        if (match is None):
            raise TensorFormatError(f"Line {number}: expected 'i j k l : rational', got {stripped!r}")
        i, j, k, l = (int(match.group(g)) for g in range(1, 5))
        if (not (i < j and k < l and (i, j) <= (k, l))):
            raise TensorFormatError(f"Line {number}: {i} {j} {k} {l} is not a canonical quadruple")
        try:
            value = as_scalar(match.group(5))
        except (ValueError, TypeError, sympy.SympifyError, InvalidParameterError) as e:
            raise TensorFormatError(f"Line {number}: bad rational {match.group(5)!r}: {e}")
        key = ((i, j), (k, l))
        if (key in entries_read):
            raise TensorFormatError(f"Line {number}: repeated quadruple {i} {j} {k} {l}")
        entries_read[key] = value

    if (n is None):
        raise TensorFormatError("The dimension n is neither given nor declared in a '# n = N' comment")
    for (first, second) in entries_read:
        if (max(first + second) >= n):
            raise TensorFormatError(f"Index out of range for n = {n}: {first + second}")
    components = {first + second: value for (first, second), value in entries_read.items()}
    return tensor_from_components(n, components)

__all__ = [
    "pairs_of",
    "sym_pairs_of",
    "sym_index",
    "sym_length",
    "weyl_dim_formula",
    "TensorW",
    "Constraint",
    "WeylCheck",
    "is_weyl",
    "WeylSpace",
    "weyl_space",
    "action_matrix",
    "act",
    "fixed_space",
    "InvariantLine",
    "InvariantLines",
    "invariant_lines",
    "Stabilizer",
    "co_stabilizer",
    "annihilator",
    "TensorKind",
    "tensor_form",
    "tensor_from_components",
    "SkewReading",
    "riem2_invariants",
    "make_tensor",
    "ReadingResult",
    "riem2_reading_report",
    "format_rational",
    "export_tensor",
    "import_tensor"
]
