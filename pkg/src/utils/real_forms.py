# import Python's standard libraries
import enum
import functools
import math
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional

# import third-party libraries
from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

# import local files
if (__package__ is None or __package__ == ""):
    from exact import (
        SparseVector, conjugate, entries, from_dok, from_rows, identity, kernel_vectors, signature
    )
    from mat_lie import (
        MetricForm, MatrixLieAlgebra, AlgebraInvariants, construct_subalgebra, block_subalgebra,
        algebra_invariants, derived, adjoint_commutant_dim
    )
    from errors import InvalidParameterError, NotInvariantError, CommutationError, DimensionMismatchError
    from logger import logger
else:
    from .exact import (
        SparseVector, conjugate, entries, from_dok, from_rows, identity, kernel_vectors, signature
    )
    from .mat_lie import (
        MetricForm, MatrixLieAlgebra, AlgebraInvariants, construct_subalgebra, block_subalgebra,
        algebra_invariants, derived, adjoint_commutant_dim
    )
    from .errors import InvalidParameterError, NotInvariantError, CommutationError, DimensionMismatchError
    from .logger import logger

@enum.unique
class InvolutionFamily(str, enum.Enum):
    A = "a"     # diag(I_pq, I_pq)
    B = "b"     # diag(i I_pq, -i I_pq)
    C = "c"     # [[0, I], [I, 0]]
    D = "d"     # [[0, J_k], [J_k, 0]]

def conjugate_matrix(m: DomainMatrix) -> DomainMatrix:
    """Entrywise complex conjugate."""
    return from_dok({k: conjugate(v, QQ_I) for k, v in entries(m).items()}, m.shape, QQ_I)

def _inverse(m: DomainMatrix) -> DomainMatrix:
    return m.to_dense().inv().to_sparse()

def _same(x: DomainMatrix, y: DomainMatrix) -> bool:
    return entries(x) == entries(y)

@dataclass(frozen=True, eq=False)
class Involution:
    """X -> A X A^{-1} on so(2l, C) in the isotropic-pair basis.

    Attributes:
        matrix (DomainMatrix):
            A over QQ_I.
        square_sign (int):
            A^2 = square_sign * 1.
        family (InvolutionFamily):
            The family letter.
        params (tuple):
            (p, q) for families a and b, (k,) for d, () for c.
        swaps (bool):
            Whether A interchanges V and V* rather than preserving both.
    """
    matrix: DomainMatrix
    square_sign: int
    family: InvolutionFamily
    params: tuple
    swaps: bool

    @property
    def ell(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def label(self) -> str:
        params = ",".join(str(p) for p in self.params)
        return f"({self.family.value}{' ' + params if (params) else ''})"

    def apply(self, x: DomainMatrix) -> DomainMatrix:
        return self.matrix.matmul(x.convert_to(QQ_I)).matmul(_inverse(self.matrix)).to_sparse()

def _ipq(p: int, q: int) -> list[Any]:
    return [QQ_I(1, 0)] * p + [QQ_I(-1, 0)] * q

def involution_family(ell: int, family: str, p: Optional[int] = None, q: Optional[int] = None,
                      k: Optional[int] = None) -> Involution:
    """The involution of a family, checked against so(2l, C) and gl(l, C).

    Args:
        ell (int):
            The rank l >= 1.
        family (str):
            a, b, c or d.
        p (int, optional), q (int, optional):
            The split p + q = l for families a and b.
        k (int, optional):
            l / 2 for family d (derived from l when omitted).

    Returns:
        Involution:
            With A^2 = +-1 verified, the swap flag set from A, and both
            so(2l, C) and gl(l, C) preserved.

    Raises:
        InvalidParameterError:
            If the parameters do not fit the family.
        CommutationError:
            If A^2 is not +-1.
        NotInvariantError:
            If conjugation by A fails to preserve so(2l, C) or gl(l, C).
    """
    try:
        family = InvolutionFamily(str(family).lower())
    except (ValueError):
        raise InvalidParameterError(f"Unknown involution family: {family!r}")
    if (ell < 1):
        raise InvalidParameterError(f"Involutions need l >= 1, got {ell}")

    n = 2 * ell
    dok = {}
    if (family in (InvolutionFamily.A, InvolutionFamily.B)):
        if (p is None or q is None or p < 0 or q < 0 or p + q != ell):
            raise InvalidParameterError(f"Family {family.value} needs p + q = {ell}, got ({p}, {q})")
        scale = QQ_I(1, 0) if (family == InvolutionFamily.A) else QQ_I(0, 1)
        for a, sign in enumerate(_ipq(p, q)):
            dok[(a, a)] = scale * sign
            dok[(ell + a, ell + a)] = conjugate(scale, QQ_I) * sign
        params = (p, q)
    elif (family == InvolutionFamily.C):
        for a in range(ell):
            dok[(a, ell + a)] = QQ_I(1, 0)
            dok[(ell + a, a)] = QQ_I(1, 0)
        params = ()
    else:
        if (ell % 2 or (k is not None and 2 * k != ell)):
            raise InvalidParameterError(f"Family d needs l = 2k even, got l = {ell}, k = {k}")
        k = ell // 2
        # J_k = [[0, -I_k], [I_k, 0]] in both off-diagonal blocks
        for a in range(k):
            dok[(a, ell + k + a)] = QQ_I(-1, 0)
            dok[(k + a, ell + a)] = QQ_I(1, 0)
            dok[(ell + a, k + a)] = QQ_I(-1, 0)
            dok[(ell + k + a, a)] = QQ_I(1, 0)
        params = (k,)

    matrix = from_dok(dok, (n, n), QQ_I)
    square = matrix.matmul(matrix)
    if (_same(square, identity(n, QQ_I))):
        square_sign = 1
    elif (_same(-square, identity(n, QQ_I))):
        square_sign = -1
    else:
        raise CommutationError(f"A^2 is not +-1 for family {family.value}")

    swaps = not any(
        (i < ell) == (j < ell) for (i, j) in entries(matrix)
    )
    theta = Involution(matrix=matrix, square_sign=square_sign, family=family, params=params, swaps=swaps)
    for alg in (construct_subalgebra("so-complex", ell=ell), construct_subalgebra("gl", ell=ell)):
        for x in alg.basis:
            if (not alg.contains(theta.apply(x))):
                raise NotInvariantError(f"{theta.label} does not preserve {alg.name}")
    return theta

@functools.lru_cache(maxsize=None)
def compact_conjugator(ell: int) -> tuple[DomainMatrix, DomainMatrix]:
    """C = T conj(T)^{-1} and its inverse, so that the compact anti-involution is Y -> C conj(Y) C^{-1}.

    T is the Gaussian frame of the isotropic-pair form, with T^T G T = I.
    For that frame C is the swap of V and V*.
    """
    frame = MetricForm.isotropic_pair(ell).gaussian_frame
    c = frame.matmul(_inverse(conjugate_matrix(frame))).to_sparse()
    return c, _inverse(c)

def compact_anti_involution(ell: int, y: DomainMatrix) -> DomainMatrix:
    c, c_inverse = compact_conjugator(ell)
    return c.matmul(conjugate_matrix(y.convert_to(QQ_I))).matmul(c_inverse).to_sparse()

def anti_involution(theta: Involution, y: DomainMatrix) -> DomainMatrix:
    """sigma = theta tau."""
    return theta.apply(compact_anti_involution(theta.ell, y))

def check_commutes(theta: Involution) -> None:
    """Raise CommutationError unless theta tau = tau theta on so(2l, C)."""
    ell = theta.ell
    for x in construct_subalgebra("so-complex", ell=ell).basis:
        if (not _same(theta.apply(compact_anti_involution(ell, x)), compact_anti_involution(ell, theta.apply(x)))):
            raise CommutationError(f"{theta.label} does not commute with the compact anti-involution")

def fixed_subalgebra(theta: Involution, alg: MatrixLieAlgebra) -> MatrixLieAlgebra:
    """{X in alg : A X A^{-1} = X}, as a kernel in the coordinates of alg.

    Raises:
        NotInvariantError:
            If theta does not preserve alg.
    """
    rows_by_key: dict[int, dict[int, Any]] = {}
    for k, x in enumerate(alg.basis):
        image = alg.coordinates(theta.apply(x))
        image[k] = image.get(k, alg.domain.zero) - alg.domain.one
        for m, value in image.items():
            if (value):
                rows_by_key.setdefault(m, {})[k] = value
    system = from_rows([rows_by_key.get(m, {}) for m in range(alg.dim)], alg.dim, alg.domain)
    vectors = kernel_vectors(system)
    return alg.subalgebra([alg.from_coordinates(v) for v in vectors], name=f"{alg.name}^{theta.label}")

def real_points(alg: MatrixLieAlgebra, sigma) -> MatrixLieAlgebra:
    """A real basis of {Y in alg : sigma(Y) = Y} for a conjugate-linear sigma preserving alg.

    Writing Y = sum (x_k + i y_k) b_k turns sigma(Y) = Y into a real system in (x, y).
    """
    d = alg.dim
    images = [alg.coordinates(sigma(b)) for b in alg.basis]
    # sigma(sum z_k b_k) = sum conj(z_k) s_mk b_m with s_mk = a + ib
    rows_by_key: dict[tuple[int, int], dict[int, Any]] = {}
    for k, image in enumerate(images):
        for m, s in image.items():
            a, b = s.x, s.y
            # real part: a x_k + b y_k ; imaginary part: b x_k - a y_k
            rows_by_key.setdefault((m, 0), {})
            rows_by_key.setdefault((m, 1), {})
            _accumulate(rows_by_key[(m, 0)], k, a)
            _accumulate(rows_by_key[(m, 0)], d + k, b)
            _accumulate(rows_by_key[(m, 1)], k, b)
            _accumulate(rows_by_key[(m, 1)], d + k, -a)
    for m in range(d):
        rows_by_key.setdefault((m, 0), {})
        rows_by_key.setdefault((m, 1), {})
        _accumulate(rows_by_key[(m, 0)], m, QQ(-1))
        _accumulate(rows_by_key[(m, 1)], d + m, QQ(-1))
    keys = sorted(rows_by_key)
    system = from_rows([{i: v for i, v in rows_by_key[key].items() if (v)} for key in keys], 2 * d, QQ)
    basis = [alg.from_coordinates(_complex_point(v, d)) for v in kernel_vectors(system)]
    return alg.subalgebra(basis, name=f"{alg.name}^sigma")

def _accumulate(row: dict[int, Any], index: int, value: Any) -> None:
    row[index] = row.get(index, QQ(0)) + value

class RealFormId(NamedTuple):
    """A real form named by its identifying invariants."""
    label: str
    dim: int
    center_dim: int
    trace_signature: tuple[int, int]
    center_signature: tuple[int, int]

    def key(self) -> tuple:
        return (self.dim, self.center_dim, self.trace_signature, self.center_signature)

def orthogonal_label(p: int, q: int) -> str:
    p, q = sorted((p, q))
    return f"so({q})" if (p == 0) else f"so({p},{q})"

def ambient_real_form(theta: Involution) -> RealFormId:
    """The real form of so(2l, C) fixed by sigma = theta tau.

    In an orthonormal frame sigma is conjugation by v -> A' conj(v) with A' = T^{-1} A T.
    When A' conj(A') = 1 the real points carry a real form of signature (p, q);
    when it is -1 the map is a quaternionic structure.

    Raises:
        CommutationError:
            If theta does not commute with the compact anti-involution.
    """
    check_commutes(theta)
    ell = theta.ell
    n = 2 * ell
    frame = MetricForm.isotropic_pair(ell).gaussian_frame
    moved = _inverse(frame).matmul(theta.matrix).matmul(frame).to_sparse()
    product = moved.matmul(conjugate_matrix(moved))
    dim = math.comb(n, 2)
    if (_same(product, -identity(n, QQ_I))):
        compact = ell * ell
        return _confirm(theta, RealFormId(f"u*({ell},H)", dim, 0, (dim - compact, compact), (0, 0)))
    if (not _same(product, identity(n, QQ_I))):
        raise CommutationError(f"{theta.label}: the real structure squares to neither +1 nor -1")

    # real points w = x + i y with A' conj(w) = w
    real, imag = _split_parts(moved)
    dok = {}
    for (i, j), v in entries(real).items():
        dok[(i, j)] = v
        dok[(n + i, n + j)] = -v
    for (i, j), v in entries(imag).items():
        dok[(i, n + j)] = v
        dok[(n + i, j)] = v
    for i in range(n):
        dok[(i, i)] = dok.get((i, i), QQ(0)) - 1
        dok[(n + i, n + i)] = dok.get((n + i, n + i), QQ(0)) - 1
    rows_by_index: dict[int, dict[int, Any]] = {}
    for (i, j), v in dok.items():
        if (v):
            rows_by_index.setdefault(i, {})[j] = v
    system = from_rows([rows_by_index.get(i, {}) for i in range(2 * n)], 2 * n, QQ)
    vectors = [_complex_point(p, n) for p in kernel_vectors(system)]
    # the form is the identity in the orthonormal frame
    gram = {}
    for a, u in enumerate(vectors):
        for b, w in enumerate(vectors):
            value = sum((u[i] * w[i] for i in u if (i in w)), QQ_I(0, 0))
            if (value):
                gram[(a, b)] = value
    positive, negative, _ = signature(from_dok(gram, (len(vectors), len(vectors)), QQ_I))
    label = orthogonal_label(positive, negative)
    closed = RealFormId(label, dim, 0, (positive * negative, math.comb(positive, 2) + math.comb(negative, 2)), (0, 0))
    return _confirm(theta, closed)

def _confirm(theta: Involution, closed: RealFormId) -> RealFormId:
    """Check the closed-form invariants against the real points of so(2l, C) under theta tau."""
    so_complex = construct_subalgebra("so-complex", ell=theta.ell)
    invariants = algebra_invariants(real_points(so_complex, lambda y: anti_involution(theta, y)))
    measured = (
        invariants.dim, invariants.center_dim,
        invariants.trace_signature[:2], invariants.center_signature[:2],
    )
    if (measured != closed.key()):
        raise DimensionMismatchError(f"{theta.label}: {closed.label} expects {closed.key()}, measured {measured}")
    return closed

def _complex_point(point: SparseVector, n: int) -> SparseVector:
    """(x, y) in Q^{2n} to x + iy in QQ_I^n."""
    out: dict[int, Any] = {}
    for index, value in point.items():
        z = QQ_I(value, 0) if (index < n) else QQ_I(0, value)
        out[index % n] = out.get(index % n, QQ_I(0, 0)) + z
    return {i: z for i, z in out.items() if (z)}

def _split_parts(m: DomainMatrix) -> tuple[DomainMatrix, DomainMatrix]:
    real = {k: v.x for k, v in entries(m).items() if (v.x)}
    imag = {k: v.y for k, v in entries(m).items() if (v.y)}
    return from_dok(real, m.shape, QQ), from_dok(imag, m.shape, QQ)

def subalgebra_catalog(ell: int) -> list[RealFormId]:
    """Closed-form invariants of the real forms of gl(l, C), as embedded in so(2l, C)."""
    dim = ell * ell
    out = []
    for p in range(ell, (ell - 1) // 2, -1):
        q = ell - p
        if (q > p):
            continue
        label = f"u({ell})" if (q == 0) else f"u({q},{p})"
        out.append(RealFormId(label, dim, 1, (2 * p * q, p * p + q * q), (0, 1)))
    out.append(RealFormId(f"gl({ell},R)", dim, 1, (ell * (ell + 1) // 2, ell * (ell - 1) // 2), (1, 0)))
    if (ell % 2 == 0):
        k = ell // 2
        out.append(RealFormId(f"gl({k},H)", dim, 1, (2 * k * k - k, k * (2 * k + 1)), (1, 0)))
    return out

def identify_real_form(alg: MatrixLieAlgebra, catalog: list[RealFormId]) -> RealFormId:
    invariants = algebra_invariants(alg)
    computed = RealFormId(
        "?",
        invariants.dim,
        invariants.center_dim,
        invariants.trace_signature[:2],
        invariants.center_signature[:2],
    )
    for candidate in catalog:
        if (candidate.key() == computed.key()):
            return candidate
    logger.warning(f"No catalog entry matches the invariants {computed.key()}")
    return computed

class RealFormRow(NamedTuple):
    involution: str
    ambient: RealFormId
    subalgebra: RealFormId

class SurrogateCheck(NamedTuple):
    block: str
    invariants: AlgebraInvariants
    derived_commutant: int
    matches: bool

class RealFormTable(NamedTuple):
    ell: int
    rows: list[RealFormRow]
    lorentzian: bool
    surrogate: list[SurrogateCheck]

def family_parameters(ell: int) -> list[tuple[str, dict]]:
    out = []
    for family in ("a", "b"):
        for p in range(ell, -1, -1):
            out.append((family, {"p": p, "q": ell - p}))
    out.append(("c", {}))
    if (ell % 2 == 0):
        out.append(("d", {"k": ell // 2}))
    return out

def lorentzian_surrogate() -> list[SurrogateCheck]:
    """so(6) x so(1,1) and so(1,5) x so(2) inside so(1,7), complexified.

    Both must carry the invariants of gl(4, C): dim 16, center 1, and a
    15-dimensional derived algebra whose adjoint commutant is 1-dimensional.
    """
    form = MetricForm.diagonal(7, 1)
    out = []
    for sizes, label in (((6, 2), "so(6)xso(1,1)"), ((2, 6), "so(2)xso(1,5)")):
        block = block_subalgebra(form, sizes).complexify()
        invariants = algebra_invariants(block)
        commutant = adjoint_commutant_dim(derived(block))
        matches = (
            invariants.dim == 16 and invariants.center_dim == 1
            and invariants.derived_dim == 15 and commutant == 1
        )
        out.append(SurrogateCheck(label, invariants, commutant, matches))
    return out

def enumerate_real_forms(ell: int) -> RealFormTable:
    """All (ambient, subalgebra) real-form pairs from the families, deduplicated by invariants.

    Raises:
        InvalidParameterError:
            If l < 2.
    """
    if (ell < 2):
        raise InvalidParameterError(f"Real-form tables need l >= 2, got {ell}")
    gl = construct_subalgebra("gl", ell=ell)
    catalog = subalgebra_catalog(ell)
    rows = []
    seen = set()
    for family, params in family_parameters(ell):
        theta = involution_family(ell, family, **params)
        ambient = ambient_real_form(theta)
        sub = identify_real_form(real_points(gl, lambda y, theta=theta: anti_involution(theta, y)), catalog)
        key = (ambient.label, sub.key())
        if (key in seen):
            continue
        seen.add(key)
        rows.append(RealFormRow(theta.label, ambient, sub))
        logger.info(f"l={ell} {theta.label}: {sub.label} in {ambient.label}")

    lorentz = orthogonal_label(1, 2 * ell - 1)
    lorentzian = any(row.ambient.label == lorentz for row in rows)
    surrogate = []
    if (ell == 4):
        surrogate = lorentzian_surrogate()
        lorentzian = lorentzian or all(check.matches for check in surrogate)
    return RealFormTable(ell=ell, rows=rows, lorentzian=lorentzian, surrogate=surrogate)

__all__ = [
    "InvolutionFamily",
    "conjugate_matrix",
    "Involution",
    "involution_family",
    "compact_conjugator",
    "compact_anti_involution",
    "anti_involution",
    "check_commutes",
    "fixed_subalgebra",
    "real_points",
    "RealFormId",
    "orthogonal_label",
    "ambient_real_form",
    "subalgebra_catalog",
    "identify_real_form",
    "RealFormRow",
    "SurrogateCheck",
    "RealFormTable",
    "family_parameters",
    "lorentzian_surrogate",
    "enumerate_real_forms"
]
