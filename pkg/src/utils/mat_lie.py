# import Python's standard libraries
import enum
import functools
from dataclasses import dataclass
from typing import Any, NamedTuple, Optional, Sequence

# import third-party libraries
from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

# import local files
if (__package__ is None or __package__ == ""):
    from exact import (
        SparseVector, Span, as_scalar, from_dok, from_rows, identity, entries,
        kernel_vectors, rank, signature, trace
    )
    from errors import InvalidParameterError, DimensionMismatchError, NotInvariantError, ClosureError
    from logger import logger
else:
    from .exact import (
        SparseVector, Span, as_scalar, from_dok, from_rows, identity, entries,
        kernel_vectors, rank, signature, trace
    )
    from .errors import InvalidParameterError, DimensionMismatchError, NotInvariantError, ClosureError
    from .logger import logger

@enum.unique
class FormConvention(str, enum.Enum):
    """Basis conventions for the metric of R^{p,q}."""
    DIAGONAL = "diagonal"               # I_{p,q}
    LIGHTCONE = "lightcone"             # g_{0,n-1} = 1, identity in the middle
    NULL_PLANE = "null-plane"           # null pairs (0,n-1) and (1,n-2), identity in the middle
    ISOTROPIC_PAIR = "isotropic-pair"   # [[0, I], [I, 0]]

def _hyperbolic_frame(n: int, pairs: Sequence[tuple[int, int]], domain: Any) -> DomainMatrix:
    """A frame diagonalizing the form on each null pair (a, b).

    Over QQ the columns are u = e_a + e_b/2 and w = e_a - e_b/2, giving +-1.
    Over QQ_I they are u = ((1+i) e_a + (1-i) e_b)/2 and w = ((-1+i) e_a + (-1-i) e_b)/2,
    giving the identity; the conjugate frame is the same frame with e_a and e_b swapped.
    Coordinates outside the pairs keep their standard vectors.
    """
    dok = {}
    paired = set()
    half = QQ(1, 2)
    for a, b in pairs:
        paired.update((a, b))
        if (domain == QQ_I):
            dok[(a, a)] = QQ_I(half, half)
            dok[(b, a)] = QQ_I(half, -half)
            dok[(a, b)] = QQ_I(-half, half)
            dok[(b, b)] = QQ_I(-half, -half)
        else:
            dok[(a, a)] = domain.one
            dok[(b, a)] = domain.convert(half)
            dok[(a, b)] = domain.one
            dok[(b, b)] = -domain.convert(half)
    for i in range(n):
        if (i not in paired):
            dok[(i, i)] = domain.one
    return from_dok(dok, (n, n), domain)

@dataclass(frozen=True, eq=False)
class MetricForm:
    """A nondegenerate symmetric bilinear form on Q^n in one of the tagged conventions.

    Attributes:
        gram (DomainMatrix):
            The Gram matrix G over QQ.
        convention (FormConvention):
            The basis convention.
        signature (tuple[int, int]):
            (positive count, negative count) of G.
        to_diagonal (DomainMatrix):
            A rational P with P^T G P diagonal with entries +-1.
        gaussian_frame (DomainMatrix | None):
            For null-pair conventions, a Gaussian-rational T with T^T G T = I.
    """
    gram: DomainMatrix
    convention: FormConvention
    signature: tuple[int, int]
    to_diagonal: DomainMatrix
    gaussian_frame: Optional[DomainMatrix] = None

    @property
    def n(self) -> int:
        return self.gram.shape[0]

    @functools.cached_property
    def inverse(self) -> DomainMatrix:
        return self.gram.to_dense().inv().to_sparse()

    @property
    def key(self) -> tuple:
        return (self.convention.value, self.n, tuple(sorted(entries(self.gram).items())))

    def __eq__(self, other: object) -> bool:
        if (not isinstance(other, MetricForm)):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"MetricForm<{self.convention.value}, n={self.n}, signature={self.signature}>"

    @classmethod
    def _build(cls, gram: DomainMatrix, convention: FormConvention,
               pairs: Sequence[tuple[int, int]] = ()) -> "MetricForm":
        n = gram.shape[0]
        positive, negative, null = signature(gram)
        if (null):
            raise InvalidParameterError(f"Degenerate form of nullity {null}")
        to_diagonal = _hyperbolic_frame(n, pairs, QQ)
        congruent = to_diagonal.transpose().matmul(gram).matmul(to_diagonal)
        if (any(i != j or v not in (1, -1) for (i, j), v in entries(congruent).items())):
            raise ClosureError("Change of basis does not diagonalize the form")
        gaussian = None
        if (pairs and negative == len(pairs)):
            gaussian = _hyperbolic_frame(n, pairs, QQ_I)
            check = gaussian.transpose().matmul(gram.convert_to(QQ_I)).matmul(gaussian)
            if (entries(check) != entries(identity(n, QQ_I))):
                raise ClosureError("Gaussian frame does not orthonormalize the form")
        return cls(gram=gram, convention=convention, signature=(positive, negative),
                   to_diagonal=to_diagonal, gaussian_frame=gaussian)

    @classmethod
    def diagonal(cls, p: int, q: int = 0) -> "MetricForm":
        """I_{p,q}: p entries +1 followed by q entries -1."""
        if (p < 0 or q < 0 or p + q < 1):
            raise InvalidParameterError(f"Invalid signature ({p},{q})")
        dok = {(i, i): QQ(1) if (i < p) else QQ(-1) for i in range(p + q)}
        return cls._build(from_dok(dok, (p + q, p + q)), FormConvention.DIAGONAL)

    @classmethod
    def lightcone(cls, n: int) -> "MetricForm":
        """The Lorentzian form with e_0, e_{n-1} null and paired, identity on e_1..e_{n-2}."""
        if (n < 2):
            raise InvalidParameterError(f"Lightcone form needs n >= 2, got {n}")
        dok = {(0, n - 1): QQ(1), (n - 1, 0): QQ(1)}
        dok.update({(i, i): QQ(1) for i in range(1, n - 1)})
        return cls._build(from_dok(dok, (n, n)), FormConvention.LIGHTCONE, [(0, n - 1)])

    @classmethod
    def null_plane(cls, n: int) -> "MetricForm":
        """Signature (n-2, 2) with null pairs (0, n-1) and (1, n-2)."""
        if (n < 4):
            raise InvalidParameterError(f"Null-plane form needs n >= 4, got {n}")
        dok = {(0, n - 1): QQ(1), (n - 1, 0): QQ(1), (1, n - 2): QQ(1), (n - 2, 1): QQ(1)}
        dok.update({(i, i): QQ(1) for i in range(2, n - 2)})
        return cls._build(from_dok(dok, (n, n)), FormConvention.NULL_PLANE, [(0, n - 1), (1, n - 2)])

    @classmethod
    def isotropic_pair(cls, ell: int) -> "MetricForm":
        """[[0, I], [I, 0]] on C^{2l} = V + V*."""
        if (ell < 1):
            raise InvalidParameterError(f"Isotropic-pair form needs l >= 1, got {ell}")
        dok = {}
        for a in range(ell):
            dok[(a, ell + a)] = QQ(1)
            dok[(ell + a, a)] = QQ(1)
        pairs = [(a, ell + a) for a in range(ell)]
        return cls._build(from_dok(dok, (2 * ell, 2 * ell)), FormConvention.ISOTROPIC_PAIR, pairs)

def elementary(n: int, i: int, j: int, domain: Any = QQ) -> DomainMatrix:
    return from_dok({(i, j): domain.one}, (n, n), domain)

def combination(terms: Sequence[tuple[Any, DomainMatrix]], n: int, domain: Any = QQ) -> DomainMatrix:
    """sum of coefficient * matrix over the terms."""
    dok = {}
    for coeff, mat in terms:
        c = as_scalar(coeff, domain)
        for key, value in entries(mat.convert_to(domain)).items():
            dok[key] = dok.get(key, domain.zero) + c * value
    return from_dok(dok, (n, n), domain)

def bracket(x: DomainMatrix, y: DomainMatrix) -> DomainMatrix:
    return (x.matmul(y) - y.matmul(x)).to_sparse()

def vectorize(m: DomainMatrix) -> SparseVector:
    n = m.shape[1]
    return {i * n + j: v for (i, j), v in entries(m).items()}

def devectorize(v: SparseVector, n: int, domain: Any) -> DomainMatrix:
    return from_dok({(k // n, k % n): value for k, value in v.items()}, (n, n), domain)

def kills_form(x: DomainMatrix, gram: DomainMatrix) -> bool:
    """X^T G + G X = 0."""
    g = gram.convert_to(x.domain)
    return not entries(x.transpose().matmul(g) + g.matmul(x))

class MatrixLieAlgebra:
    """A Lie algebra of n x n matrices over QQ or QQ_I given by an explicit basis.

    Closure under the commutator and, when a form is attached, X^T G + G X = 0
    are verified at construction.

    Args:
        basis (Sequence[DomainMatrix]):
            Linearly independent n x n matrices.
        n (int):
            The matrix size.
        domain (QQ | QQ_I):
            The scalar field.
        form (MetricForm, optional):
            The preserved form.
        name (str, optional):
            A label for logs and reports.
        verify (bool, optional):
            Whether to check closure and the form. Defaults to True.

    Raises:
        ClosureError:
            If the basis is dependent, not closed, or does not kill the form.
    """
    def __init__(self, basis: Sequence[DomainMatrix], n: int, domain: Any = QQ,
                 form: Optional[MetricForm] = None, name: str = "", verify: bool = True) -> None:
        self.n = n
        self.domain = domain
        self.form = form
        self.name = name
        self.basis = [b.convert_to(domain).to_sparse() for b in basis]
        for b in self.basis:
            if (b.shape != (n, n)):
                raise DimensionMismatchError(f"Basis element of shape {b.shape} in an algebra of size {n}")
        self.vectors = [vectorize(b) for b in self.basis]
        self.span = Span(self.vectors, n * n, domain)
        if (verify):
            self.verify()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def verify(self) -> None:
        if (self.form is not None):
            for b in self.basis:
                if (not kills_form(b, self.form.gram)):
                    raise ClosureError(f"{self.name or 'algebra'}: a basis element does not preserve the form")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if (not self.span.contains(vectorize(bracket(self.basis[i], self.basis[j])))):
                    raise ClosureError(f"{self.name or 'algebra'}: [b_{i}, b_{j}] leaves the span")

    def contains(self, x: DomainMatrix) -> bool:
        return self.span.contains(vectorize(x.convert_to(self.domain)))

    def contains_algebra(self, other: "MatrixLieAlgebra") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, x: DomainMatrix) -> SparseVector:
        """Coordinates of x in the basis; raises NotInvariantError outside the span."""
        return self.span.coordinates(vectorize(x.convert_to(self.domain)))

    def structure_constants(self) -> dict[tuple[int, int], SparseVector]:
        """[b_i, b_j] in basis coordinates for i < j."""
        return {
            (i, j): self.coordinates(bracket(self.basis[i], self.basis[j]))
            for i in range(self.dim) for j in range(i + 1, self.dim)
        }

    def subalgebra(self, matrices: Sequence[DomainMatrix], name: str = "", verify: bool = True) -> "MatrixLieAlgebra":
        return MatrixLieAlgebra(matrices, self.n, self.domain, self.form, name=name, verify=verify)

    def from_coordinates(self, coords: SparseVector) -> DomainMatrix:
        return combination([(c, self.basis[k]) for k, c in coords.items()], self.n, self.domain)

    def complexify(self) -> "MatrixLieAlgebra":
        return MatrixLieAlgebra(self.basis, self.n, QQ_I, self.form, name=f"{self.name}_C", verify=False)

    def __repr__(self) -> str:
        return f"MatrixLieAlgebra<{self.name or '?'}, dim={self.dim}, n={self.n}, domain={self.domain}>"

def so_basis(form: MetricForm, domain: Any = QQ) -> MatrixLieAlgebra:
    """so(G) with the basis G^{-1}(E_ij - E_ji), i < j."""
    n = form.n
    inverse = form.inverse.convert_to(domain)
    basis = [
        inverse.matmul(elementary(n, i, j, domain) - elementary(n, j, i, domain)).to_sparse()
        for i in range(n) for j in range(i + 1, n)
    ]
    return MatrixLieAlgebra(basis, n, domain, form, name=f"so{form.signature}", verify=False)

def rotation(n: int, i: int, j: int, domain: Any = QQ) -> DomainMatrix:
    """L_ij = E_ij - E_ji."""
    return (elementary(n, i, j, domain) - elementary(n, j, i, domain)).to_sparse()

def grading_element(n: int) -> DomainMatrix:
    """e_0^0 - e_{n-1}^{n-1}, scaling the translations of p1."""
    return (elementary(n, 0, 0) - elementary(n, n - 1, n - 1)).to_sparse()

def translation(n: int, i: int) -> DomainMatrix:
    """e_0 (x) w^i - e_i (x) w^{n-1}."""
    return (elementary(n, 0, i) - elementary(n, i, n - 1)).to_sparse()

def _su2_triple(n: int, idx: Sequence[int], self_dual: bool) -> list[DomainMatrix]:
    """The self-dual (L) or anti-self-dual (R) so(3) on four indices a, b, c, d."""
    a, b, c, d = idx
    sign = 1 if (self_dual) else -1
    return [
        combination([(1, rotation(n, a, b)), (sign, rotation(n, c, d))], n),
        combination([(1, rotation(n, a, c)), (-sign, rotation(n, b, d))], n),
        combination([(1, rotation(n, a, d)), (sign, rotation(n, b, c))], n),
    ]

@enum.unique
class SubalgebraKind(str, enum.Enum):
    U = "u"                     # u(l) in so(2l)
    GL = "gl"                   # gl(l, C) in so(2l, C)
    SL = "sl"                   # sl(l, C) in so(2l, C)
    SO_COMPLEX = "so-complex"   # so(2l, C) on the isotropic pair
    P1 = "p1"
    R1 = "r1"
    S = "s"
    BLOCK = "block"             # so(k_1) x so(k_2) x ... on consecutive index blocks
    SO3_L = "so3-L"
    SO3_R = "so3-R"
    SO_R1 = "so-r1"             # so(n-2) on the middle indices, semidirect r1
    N6_GRADED = "n6-graded"     # (R + so(3)_R) x r1
    N6_ROTATED = "n6-rotated"   # (so(2)_L x so(3)_R) x r1
    N6_FULL = "n6-full"         # (R + so(2)_L x so(3)_R) x r1
    G2 = "g2"
    P2 = "p2"

# e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}, 1-based
G2_THREE_FORM = {
    (1, 2, 3): 1, (1, 4, 5): 1, (1, 6, 7): 1, (2, 4, 6): 1,
    (2, 5, 7): -1, (3, 4, 7): -1, (3, 5, 6): -1,
}

def _sort_sign(indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, 0 on a repeated index."""
    idx = list(indices)
    if (len(set(idx)) < len(idx)):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if (idx[j] > idx[j + 1]):
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)

def act_on_form(x: DomainMatrix, form_coeffs: dict[tuple[int, ...], Any]) -> dict[tuple[int, ...], Any]:
    """Derivation action on an exterior form, with X.w^a = -sum_b X[a][b] w^b."""
    rows_of_x = x.to_sparse().to_dod()
    out = {}
    for indices, coeff in form_coeffs.items():
        for slot, a in enumerate(indices):
            for b, value in rows_of_x.get(a, {}).items():
                replaced = list(indices)
                replaced[slot] = b
                sign, key = _sort_sign(replaced)
                if (sign):
                    out[key] = out.get(key, 0) - sign * coeff * value
    return {k: v for k, v in out.items() if (v)}

def annihilator_subalgebra(ambient: MatrixLieAlgebra, form_coeffs: dict[tuple[int, ...], Any],
                           name: str = "") -> MatrixLieAlgebra:
    """The elements of ambient killing an exterior form, as one kernel."""
    keys = {}
    images = []
    for b in ambient.basis:
        image = act_on_form(b, form_coeffs)
        for key in image:
            keys.setdefault(key, len(keys))
        images.append(image)
    rows_by_key = {}
    for k, image in enumerate(images):
        for key, value in image.items():
            rows_by_key.setdefault(keys[key], {})[k] = value
    system = from_rows([rows_by_key.get(r, {}) for r in range(len(keys))], ambient.dim, ambient.domain)
    return ambient.subalgebra(
        [ambient.from_coordinates(v) for v in kernel_vectors(system)], name=name
    )

def subspace_stabilizer(ambient: MatrixLieAlgebra, subspace: Sequence[SparseVector], name: str = "") -> MatrixLieAlgebra:
    """The elements of ambient mapping span(subspace) into itself."""
    span = Span(subspace, ambient.n, ambient.domain)
    # coordinates of X v modulo the span are linear in X
    rows_by_key: dict[tuple[int, int], dict[int, Any]] = {}
    for k, b in enumerate(ambient.basis):
        for s, v in enumerate(subspace):
            image = _apply_matrix(b, v)
            _, residual = span.reduce(image)
            for i, value in residual.items():
                rows_by_key.setdefault((s, i), {})[k] = value
    keys = sorted(rows_by_key)
    system = from_rows([rows_by_key[key] for key in keys], ambient.dim, ambient.domain)
    return ambient.subalgebra(
        [ambient.from_coordinates(v) for v in kernel_vectors(system)], name=name
    )

def _apply_matrix(x: DomainMatrix, v: SparseVector) -> SparseVector:
    out = {}
    for i, row in x.to_sparse().to_dod().items():
        total = sum((value * v[j] for j, value in row.items() if (j in v)), x.domain.zero)
        if (total):
            out[i] = total
    return out

def construct_subalgebra(kind: str, n: Optional[int] = None, ell: Optional[int] = None,
                         sizes: Optional[Sequence[int]] = None, mirror: bool = False) -> MatrixLieAlgebra:
    """Build one of the named subalgebras.

    Args:
        kind (str):
            A SubalgebraKind value.
        n (int, optional):
            The ambient size for p1, r1, s, block, so3-L/R, so-r1, the n = 6
            candidates and p2.
        ell (int, optional):
            The rank for u, gl, sl and so-complex.
        sizes (Sequence[int], optional):
            Block sizes for "block"; they must sum to n.
        mirror (bool, optional):
            Swap the roles of so(3)_L and so(3)_R in the n = 6 candidates.

    Returns:
        MatrixLieAlgebra:
            The verified subalgebra, carrying the ambient form.

    Raises:
        InvalidParameterError:
            If the kind or its parameters are invalid.
    """
    try:
        kind = SubalgebraKind(kind)
    except (ValueError):
        raise InvalidParameterError(f"Unknown subalgebra kind: {kind!r}")

    if (kind in (SubalgebraKind.U, SubalgebraKind.GL, SubalgebraKind.SL, SubalgebraKind.SO_COMPLEX)):
        if (ell is None or ell < 1 or (kind != SubalgebraKind.SO_COMPLEX and ell < 2)):
            raise InvalidParameterError(f"{kind.value} needs l >= 2, got {ell}")
        return _build_rank_family(kind, ell)

    if (n is None):
        raise InvalidParameterError(f"{kind.value} needs n")
    if (kind == SubalgebraKind.BLOCK):
        return _build_block(n, sizes)
    if (kind in (SubalgebraKind.SO3_L, SubalgebraKind.SO3_R)):
        if (n < 4):
            raise InvalidParameterError(f"so(3) triples need n >= 4, got {n}")
        form = MetricForm.diagonal(n)
        basis = _su2_triple(n, (0, 1, 2, 3), kind == SubalgebraKind.SO3_L)
        return MatrixLieAlgebra(basis, n, QQ, form, name=kind.value)
    if (kind == SubalgebraKind.G2):
        if (n != 7):
            raise InvalidParameterError(f"g2 lives in so(7), got n = {n}")
        ambient = so_basis(MetricForm.diagonal(7))
        three_form = {tuple(i - 1 for i in key): QQ(v) for key, v in G2_THREE_FORM.items()}
        return annihilator_subalgebra(ambient, three_form, name="g2")
    if (kind == SubalgebraKind.P2):
        if (n < 4):
            raise InvalidParameterError(f"p2 needs n >= 4, got {n}")
        ambient = so_basis(MetricForm.null_plane(n))
        plane = [{n - 2: QQ(1)}, {n - 1: QQ(1)}]
        return subspace_stabilizer(ambient, plane, name="p2")
    return _build_lightcone_family(kind, n, mirror)

def _build_rank_family(kind: SubalgebraKind, ell: int) -> MatrixLieAlgebra:
    n = 2 * ell
    if (kind == SubalgebraKind.U):
        basis = []
        for a in range(ell):
            for b in range(a + 1, ell):
                basis.append(combination([(1, rotation(n, a, b)), (1, rotation(n, ell + a, ell + b))], n))
        for a in range(ell):
            for b in range(a, ell):
                # [[0, -B], [B, 0]] with B = E_ab + E_ba (or E_aa)
                terms = [(1, elementary(n, ell + a, b)), (-1, elementary(n, a, ell + b))]
                if (a != b):
                    terms += [(1, elementary(n, ell + b, a)), (-1, elementary(n, b, ell + a))]
                basis.append(combination(terms, n))
        return MatrixLieAlgebra(basis, n, QQ, MetricForm.diagonal(n), name=f"u({ell})")

    form = MetricForm.isotropic_pair(ell)
    if (kind == SubalgebraKind.SO_COMPLEX):
        alg = so_basis(form, QQ_I)
        alg.name = f"so({n},C)"
        return alg

    def gl_element(a: int, b: int) -> DomainMatrix:
        # [[A, 0], [0, -A^T]] with A = E_ab
        return combination([(1, elementary(n, a, b, QQ_I)), (-1, elementary(n, ell + b, ell + a, QQ_I))], n, QQ_I)

    basis = [gl_element(a, b) for a in range(ell) for b in range(ell) if (a != b)]
    if (kind == SubalgebraKind.GL):
        basis += [gl_element(a, a) for a in range(ell)]
        name = f"gl({ell},C)"
    else:
        basis += [combination([(1, gl_element(a, a)), (-1, gl_element(a + 1, a + 1))], n, QQ_I) for a in range(ell - 1)]
        name = f"sl({ell},C)"
    return MatrixLieAlgebra(basis, n, QQ_I, form, name=name)

def _build_block(n: int, sizes: Optional[Sequence[int]], form: Optional[MetricForm] = None) -> MatrixLieAlgebra:
    if (not sizes or any(s < 1 for s in sizes) or sum(sizes) != n):
        raise InvalidParameterError(f"Block sizes {sizes} do not partition {n}")
    form = form or MetricForm.diagonal(n)
    inverse = form.inverse
    basis = []
    start = 0
    for size in sizes:
        for i in range(start, start + size):
            for j in range(i + 1, start + size):
                basis.append(inverse.matmul(rotation(n, i, j)).to_sparse())
        start += size
    label = "x".join(f"so({s})" for s in sizes if (s > 1)) or "0"
    return MatrixLieAlgebra(basis, n, QQ, form, name=label)

def block_subalgebra(form: MetricForm, sizes: Sequence[int]) -> MatrixLieAlgebra:
    """so on consecutive index blocks of a diagonal form of any signature."""
    if (form.convention != FormConvention.DIAGONAL):
        raise InvalidParameterError("Block subalgebras need a diagonal form")
    return _build_block(form.n, sizes, form)

def _build_lightcone_family(kind: SubalgebraKind, n: int, mirror: bool) -> MatrixLieAlgebra:
    if (n < 4):
        raise InvalidParameterError(f"{kind.value} needs n >= 4, got {n}")
    form = MetricForm.lightcone(n)
    grading = [grading_element(n)]
    r1 = [translation(n, i) for i in range(1, n - 1)]
    middle = range(1, n - 1)

    if (kind == SubalgebraKind.P1):
        basis = grading + [rotation(n, i, j) for i in middle for j in middle if (i < j)] + r1
    elif (kind == SubalgebraKind.R1):
        basis = r1
    elif (kind == SubalgebraKind.S):
        basis = grading + [rotation(n, i, j) for i in range(2, n - 1) for j in range(2, n - 1) if (i < j)] + r1
    elif (kind == SubalgebraKind.SO_R1):
        basis = [rotation(n, i, j) for i in middle for j in middle if (i < j)] + r1
    else:
        if (n != 6):
            raise InvalidParameterError(f"{kind.value} is a candidate in dimension 6, got n = {n}")
        left = _su2_triple(n, (1, 2, 3, 4), not mirror)
        right = _su2_triple(n, (1, 2, 3, 4), mirror)
        if (kind == SubalgebraKind.N6_GRADED):
            basis = grading + right + r1
        elif (kind == SubalgebraKind.N6_ROTATED):
            basis = left[:1] + right + r1
        else:
            basis = grading + left[:1] + right + r1
    return MatrixLieAlgebra(basis, n, QQ, form, name=f"{kind.value}({n})" + ("'" if (mirror) else ""))

def realify(alg: MatrixLieAlgebra) -> MatrixLieAlgebra:
    """The real Lie algebra underlying a complex one: X = A + iB becomes [[A, -B], [B, A]].

    The basis {X, iX} doubles the dimension.
    """
    if (alg.domain != QQ_I):
        raise InvalidParameterError("realify needs an algebra over QQ_I")
    n = alg.n
    basis = []
    for b in alg.basis:
        for scale in (QQ_I(1, 0), QQ_I(0, 1)):
            dok = {}
            for (i, j), value in entries(b).items():
                z = value * scale
                if (z.x):
                    dok[(i, j)] = z.x
                    dok[(n + i, n + j)] = z.x
                if (z.y):
                    dok[(n + i, j)] = z.y
                    dok[(i, n + j)] = -z.y
            basis.append(from_dok(dok, (2 * n, 2 * n), QQ))
    return MatrixLieAlgebra(basis, 2 * n, QQ, None, name=f"{alg.name}_R")

def _stack_system(blocks: Sequence[dict[Any, dict[int, Any]]], width: int, domain: Any) -> DomainMatrix:
    rows_out = []
    for block in blocks:
        for key in sorted(block):
            rows_out.append(block[key])
    return from_rows(rows_out, width, domain)

def centralizer(sub: MatrixLieAlgebra, ambient: MatrixLieAlgebra, name: str = "") -> MatrixLieAlgebra:
    """{X in ambient : [X, Y] = 0 for every basis element Y of sub}, as one kernel.

    Raises:
        NotInvariantError:
            If sub does not lie inside ambient.
    """
    if (sub.n != ambient.n):
        raise DimensionMismatchError(f"Sizes {sub.n} and {ambient.n} differ")
    domain = ambient.domain.unify(sub.domain)
    if (not all(ambient.span.contains(vectorize(y.convert_to(domain))) for y in sub.basis)):
        raise NotInvariantError(f"{sub.name or 'subalgebra'} is not inside {ambient.name or 'the ambient algebra'}")

    block: dict[tuple[int, int], dict[int, Any]] = {}
    for k, x in enumerate(ambient.basis):
        for s, y in enumerate(sub.basis):
            for pos, value in vectorize(bracket(x.convert_to(domain), y.convert_to(domain))).items():
                block.setdefault((s, pos), {})[k] = value
    system = _stack_system([block], ambient.dim, domain)
    vectors = kernel_vectors(system) if (block) else [{k: domain.one} for k in range(ambient.dim)]
    return ambient.subalgebra([ambient.from_coordinates(v) for v in vectors], name=name or "centralizer")

def center(alg: MatrixLieAlgebra) -> list[SparseVector]:
    """Basis-coordinate vectors of the center, from the structure constants.

    Real structure constants give a real basis even over QQ_I.
    """
    constants = alg.structure_constants()
    block: dict[tuple[int, int], dict[int, Any]] = {}
    for (i, j), coords in constants.items():
        for m, value in coords.items():
            # ad(b_i) b_j = c, ad(b_j) b_i = -c
            block.setdefault((j, m), {})[i] = value
            block.setdefault((i, m), {})[j] = -value
    if (not block):
        return [{k: alg.domain.one} for k in range(alg.dim)]
    return kernel_vectors(_stack_system([block], alg.dim, alg.domain))

def derived(alg: MatrixLieAlgebra) -> MatrixLieAlgebra:
    """The span of all commutators, with a reduced echelon basis."""
    brackets = [
        vectorize(bracket(alg.basis[i], alg.basis[j]))
        for i in range(alg.dim) for j in range(i + 1, alg.dim)
    ]
    span = Span(brackets, alg.n * alg.n, alg.domain, require_independent=False)
    basis = [devectorize(v, alg.n, alg.domain) for v in span.echelon]
    return alg.subalgebra(basis, name=f"[{alg.name},{alg.name}]", verify=False)

def trace_form(alg: MatrixLieAlgebra, vectors: Optional[Sequence[SparseVector]] = None) -> DomainMatrix:
    """Gram matrix of tr(XY) on the basis, or on the given coordinate vectors."""
    if (vectors is None):
        elements = alg.basis
    else:
        elements = [alg.from_coordinates(v) for v in vectors]
    size = len(elements)
    dok = {}
    for i in range(size):
        for j in range(i, size):
            value = trace(elements[i].matmul(elements[j]))
            if (value):
                dok[(i, j)] = value
                dok[(j, i)] = value
    return from_dok(dok, (size, size), alg.domain)

class AlgebraInvariants(NamedTuple):
    dim: int
    center_dim: int
    derived_dim: int
    trace_signature: tuple[int, int, int]
    center_signature: tuple[int, int, int]

def algebra_invariants(alg: MatrixLieAlgebra) -> AlgebraInvariants:
    """dim, center dim, derived dim and the signatures of tr(XY) on the algebra and on its center."""
    center_vectors = center(alg)
    return AlgebraInvariants(
        dim=alg.dim,
        center_dim=len(center_vectors),
        derived_dim=derived(alg).dim,
        trace_signature=signature(trace_form(alg)),
        center_signature=signature(trace_form(alg, center_vectors)) if (center_vectors) else (0, 0, 0),
    )

def adjoint_matrices(alg: MatrixLieAlgebra) -> list[DomainMatrix]:
    """ad(b_i) in basis coordinates."""
    constants = alg.structure_constants()
    out = []
    for i in range(alg.dim):
        dok = {}
        for j in range(alg.dim):
            if (i == j):
                continue
            coords = constants[(i, j)] if (i < j) else {m: -v for m, v in constants[(j, i)].items()}
            for m, value in coords.items():
                dok[(m, j)] = value
        out.append(from_dok(dok, (alg.dim, alg.dim), alg.domain))
    return out

def adjoint_commutant_dim(alg: MatrixLieAlgebra) -> int:
    """Dimension of {T : T ad_X = ad_X T for all X}; 1 for a simple complex algebra."""
    d = alg.dim
    block: dict[tuple[int, int, int], dict[int, Any]] = {}
    # unknown T[r][c] at index r * d + c; (T A - A T)[r][s] = sum_c T[r][c] A[c][s] - sum_c A[r][c] T[c][s]
    for k, ad in enumerate(adjoint_matrices(alg)):
        a = entries(ad)
        for (c, s), value in a.items():
            for r in range(d):
                row = block.setdefault((k, r, s), {})
                row[r * d + c] = row.get(r * d + c, 0) + value
        for (r, c), value in a.items():
            for s in range(d):
                row = block.setdefault((k, r, s), {})
                row[c * d + s] = row.get(c * d + s, 0) - value
    cleaned = {key: {i: v for i, v in row.items() if (v)} for key, row in block.items()}
    system = _stack_system([cleaned], d * d, alg.domain)
    return d * d - rank(system)

class SubspaceStabilization(NamedTuple):
    stabilizes: bool
    form_rank: Optional[int]

def stabilizes_subspace(alg: MatrixLieAlgebra, subspace: Sequence[SparseVector]) -> SubspaceStabilization:
    """Whether every basis element maps span(subspace) into itself, with the rank of G on the subspace."""
    span = Span(subspace, alg.n, alg.domain)
    stabilizes = all(
        span.contains(_apply_matrix(b, v)) for b in alg.basis for v in subspace
    )
    form_rank = None
    if (alg.form is not None):
        gram = alg.form.gram.convert_to(alg.domain)
        dok = {}
        for i, u in enumerate(subspace):
            gu = _apply_matrix(gram, u)
            for j, v in enumerate(subspace):
                value = sum((gu[k] * v[k] for k in v if (k in gu)), alg.domain.zero)
                if (value):
                    dok[(i, j)] = value
        form_rank = rank(from_dok(dok, (len(subspace), len(subspace)), alg.domain)) if (dok) else 0
    return SubspaceStabilization(stabilizes=stabilizes, form_rank=form_rank)

def lie_generators(alg: MatrixLieAlgebra) -> list[DomainMatrix]:
    """A generating subset of the basis, chosen greedily in basis order."""
    generators = []
    closure = Span([], alg.n * alg.n, alg.domain)
    members: list[DomainMatrix] = []
    for b in alg.basis:
        if (closure.contains(vectorize(b))):
            continue
        generators.append(b)
        queue = [b]
        members.append(b)
        closure = Span([vectorize(m) for m in members], alg.n * alg.n, alg.domain)
        while (queue):
            x = queue.pop()
            for y in list(members):
                z = bracket(x, y)
                vz = vectorize(z)
                if (vz and not closure.contains(vz)):
                    members.append(z)
                    queue.append(z)
                    closure = Span([vectorize(m) for m in members], alg.n * alg.n, alg.domain)
        if (closure.dim == alg.dim):
            break
    logger.debug(f"{alg.name or 'algebra'}: {len(generators)} generators for dim {alg.dim}")
    return generators

__all__ = [
    "FormConvention",
    "MetricForm",
    "elementary",
    "combination",
    "bracket",
    "vectorize",
    "devectorize",
    "kills_form",
    "MatrixLieAlgebra",
    "so_basis",
    "rotation",
    "grading_element",
    "translation",
    "SubalgebraKind",
    "G2_THREE_FORM",
    "act_on_form",
    "annihilator_subalgebra",
    "subspace_stabilizer",
    "construct_subalgebra",
    "block_subalgebra",
    "realify",
    "centralizer",
    "center",
    "derived",
    "trace_form",
    "AlgebraInvariants",
    "algebra_invariants",
    "adjoint_matrices",
    "adjoint_commutant_dim",
    "SubspaceStabilization",
    "stabilizes_subspace",
    "lie_generators"
]
