# import Python's standard libraries
from fractions import Fraction
from typing import Any, NamedTuple, Optional, Sequence, Union

# import third-party libraries
import sympy
from sympy import QQ, QQ_I, Poly
from sympy.polys.matrices import DomainMatrix

# import local files
if (__package__ is None or __package__ == ""):
    from errors import (
        InvalidParameterError, DimensionMismatchError, NotSymmetricError,
        NotInvariantError, ClosureError
    )
    from logger import logger
else:
    from .errors import (
        InvalidParameterError, DimensionMismatchError, NotSymmetricError,
        NotInvariantError, ClosureError
    )
    from .logger import logger

# A sparse vector maps coordinate indices to nonzero domain elements.
SparseVector = dict[int, Any]

LARGE_KERNEL_ROWS = 1000

def check_field(domain: Any) -> None:
    """Raise if the domain is neither QQ nor QQ_I."""
    if (domain != QQ and domain != QQ_I):
        raise InvalidParameterError(f"Only QQ and QQ_I are supported, got {domain}")

def as_scalar(value: Any, domain: Any = QQ) -> Any:
    """Convert a Python or SymPy number to an element of the given domain.

    Args:
        value (Any):
            An int, a Fraction, a "num/den" string, a (real, imaginary) tuple
            for QQ_I, a SymPy expression or an element of QQ/QQ_I.
        domain (QQ | QQ_I):
            The target domain.

    Returns:
        The exact domain element.
    """
    check_field(domain)
    if (isinstance(value, tuple)):
        if (domain != QQ_I):
            raise InvalidParameterError("Complex pairs need the QQ_I domain")
        return QQ_I(as_scalar(value[0], QQ), as_scalar(value[1], QQ))
    if (isinstance(value, Fraction)):
        return domain.convert(QQ(value.numerator, value.denominator))
    if (isinstance(value, str)):
        return domain.from_sympy(sympy.Rational(value.strip()))
    if (isinstance(value, sympy.Basic)):
        return domain.from_sympy(value)
    return domain.convert(value)

def conjugate(value: Any, domain: Any) -> Any:
    """Complex conjugate of a QQ_I element (identity on QQ)."""
    if (domain == QQ):
        return value
    return QQ_I(value.x, -value.y)

def matrix(rows: Sequence[Sequence[Any]], domain: Any = QQ) -> DomainMatrix:
    """Build a sparse DomainMatrix from nested rows of numbers."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if (n_rows) else 0
    dok = {}
    for i, row in enumerate(rows):
        if (len(row) != n_cols):
            raise DimensionMismatchError("All rows must have the same length")
        for j, value in enumerate(row):
            entry = as_scalar(value, domain)
            if (entry):
                dok[(i, j)] = entry
    return DomainMatrix.from_dok(dok, (n_rows, n_cols), domain)

def from_dok(dok: dict[tuple[int, int], Any], shape: tuple[int, int], domain: Any = QQ) -> DomainMatrix:
    """Build a sparse DomainMatrix from {(row, col): value}, dropping zeros."""
    return DomainMatrix.from_dok({k: v for k, v in dok.items() if (v)}, shape, domain)

def identity(n: int, domain: Any = QQ) -> DomainMatrix:
    return from_dok({(i, i): domain.one for i in range(n)}, (n, n), domain)

def zeros(n_rows: int, n_cols: int, domain: Any = QQ) -> DomainMatrix:
    return DomainMatrix.from_dok({}, (n_rows, n_cols), domain)

def entries(m: DomainMatrix) -> dict[tuple[int, int], Any]:
    """Nonzero entries of a matrix as {(row, col): value}."""
    return {k: v for k, v in m.to_sparse().to_dok().items() if (v)}

def entry(m: DomainMatrix, i: int, j: int) -> Any:
    return m.rep.getitem(i, j)

def from_columns(vectors: Sequence[SparseVector], length: int, domain: Any = QQ) -> DomainMatrix:
    """Stack sparse vectors as the columns of a length x len(vectors) matrix."""
    dok = {}
    for j, vec in enumerate(vectors):
        for i, value in vec.items():
            if (value):
                dok[(i, j)] = value
    return DomainMatrix.from_dok(dok, (length, len(vectors)), domain)

def from_rows(vectors: Sequence[SparseVector], length: int, domain: Any = QQ) -> DomainMatrix:
    """Stack sparse vectors as the rows of a len(vectors) x length matrix."""
    dod = {}
    for i, vec in enumerate(vectors):
        row = {j: value for j, value in vec.items() if (value)}
        if (row):
            dod[i] = row
    return DomainMatrix.from_dod(dod, (len(vectors), length), domain)

def columns(m: DomainMatrix) -> list[SparseVector]:
    """Split a matrix into its columns as sparse vectors."""
    cols = [{} for _ in range(m.shape[1])]
    for (i, j), value in entries(m).items():
        cols[j][i] = value
    return cols

def rows(m: DomainMatrix) -> list[SparseVector]:
    """Split a matrix into its rows as sparse vectors."""
    dod = m.to_sparse().to_dod()
    return [dict(dod.get(i, {})) for i in range(m.shape[0])]

def vector_add(u: SparseVector, v: SparseVector, scale: Any = None) -> SparseVector:
    """Return u + scale * v."""
    out = dict(u)
    for i, value in v.items():
        term = value if (scale is None) else scale * value
        total = out.get(i, 0) + term
        if (total):
            out[i] = total
        else:
            out.pop(i, None)
    return out

def vector_scale(v: SparseVector, scale: Any) -> SparseVector:
    if (not scale):
        return {}
    return {i: scale * value for i, value in v.items()}

def apply(m: DomainMatrix, v: SparseVector) -> SparseVector:
    """Multiply a matrix by a sparse vector."""
    out = {}
    for i, row in m.to_sparse().to_dod().items():
        total = 0
        for j, value in row.items():
            if (j in v):
                total += value * v[j]
        if (total):
            out[i] = total
    return out

def normalize_line(v: SparseVector, domain: Any = QQ) -> SparseVector:
    """Scale a nonzero vector so that its first nonzero coordinate is 1."""
    if (not v):
        raise InvalidParameterError("The zero vector does not span a line")
    lead = v[min(v)]
    inverse = domain.one / lead
    return {i: value * inverse for i, value in v.items()}

def is_zero(m: DomainMatrix) -> bool:
    return not entries(m)

def trace(m: DomainMatrix) -> Any:
    """Sum of the diagonal entries, as an element of m.domain."""
    total = m.domain.zero
    for (i, j), value in entries(m).items():
        if (i == j):
            total += value
    return total

def rank(m: DomainMatrix) -> int:
    if (m.shape[0] == 0 or m.shape[1] == 0):
        return 0
    return len(m.to_sparse().to_field().rref()[1])

def kernel(m: DomainMatrix) -> DomainMatrix:
    """Basis of the null space of m, as the columns of the returned matrix.

    The basis is the reduced echelon one: each column has a 1 at one free
    coordinate and zeros at every other free coordinate, in increasing
    order of the free coordinate. An empty matrix returns the standard basis.

    Args:
        m (DomainMatrix):
            The matrix whose kernel to compute.

    Returns:
        DomainMatrix:
            An n_cols x nullity matrix.
    """
    n_rows, n_cols = m.shape
    domain = m.domain
    if (n_rows == 0 or is_zero(m)):
        return identity(n_cols, domain)
    if (n_rows > LARGE_KERNEL_ROWS):
        logger.info(f"Computing the kernel of a {n_rows}x{n_cols} matrix over {domain}")

    reduced, pivots = m.to_sparse().to_field().rref()
    if (len(pivots) == n_cols):
        return zeros(n_cols, 0, domain)
    null_rows = reduced.nullspace_from_rref(pivots)
    return null_rows.transpose().to_sparse()

def kernel_vectors(m: DomainMatrix) -> list[SparseVector]:
    return columns(kernel(m))

def signature(m: DomainMatrix) -> tuple[int, int, int]:
    """Signature of a symmetric rational matrix by exact congruence.

    Args:
        m (DomainMatrix):
            A symmetric matrix over QQ (or over QQ_I with real entries).

    Returns:
        tuple[int, int, int]:
            (positive count, negative count, null count).

    Raises:
        NotSymmetricError:
            If m is not square or not symmetric.
    """
    n_rows, n_cols = m.shape
    if (n_rows != n_cols):
        raise NotSymmetricError(f"Expected a square matrix, got {n_rows}x{n_cols}")
    if (m.to_sparse() != m.transpose().to_sparse()):
        raise NotSymmetricError("Signature requested for a non-symmetric matrix")

    if (m.domain == QQ_I):
        real_entries = {}
        for key, value in entries(m).items():
            if (value.y):
                raise NotSymmetricError("Signature requires real entries")
            real_entries[key] = value.x
        m = from_dok(real_entries, m.shape, QQ)
    elif (m.domain != QQ):
        m = m.convert_to(QQ)

    a = [[QQ.zero] * n_cols for _ in range(n_rows)]
    for (i, j), value in entries(m).items():
        a[i][j] = value

    positive = negative = 0
    active = list(range(n_rows))
    while (active):
        pivot = next((i for i in active if (a[i][i])), None)
        if (pivot is not None):
            d = a[pivot][pivot]
            if (d > 0):
                positive += 1
            else:
                negative += 1
            active.remove(pivot)
            for j in active:
                if (not a[j][pivot]):
                    continue
                factor = a[j][pivot] / d
                for k in active:
                    if (a[pivot][k]):
                        a[j][k] -= factor * a[pivot][k]
            continue

        off = next(((i, j) for i in active for j in active if (i != j and a[i][j])), None)
        if (off is None):
            break
        # row i += row j, then column i += column j; the new diagonal is 2*a[i][j]
        i, j = off
        for k in active:
            a[i][k] += a[j][k]
        for k in active:
            a[k][i] += a[k][j]

    return positive, negative, n_rows - positive - negative

class Span:
    """An exact linear span of sparse vectors of a fixed length.

    Stores the reduced echelon basis of the span together with the
    transform from the generating vectors, so membership tests and
    coordinates in terms of the generators are single reductions.
    """
    def __init__(self, vectors: Sequence[SparseVector], length: int, domain: Any = QQ,
                 require_independent: bool = True) -> None:
        check_field(domain)
        self.length = length
        self.domain = domain
        self.generators = [dict(v) for v in vectors]
        count = len(self.generators)
        self.echelon: list[SparseVector] = []
        self.pivots: list[int] = []
        self.transform: list[SparseVector] = []
        if (count == 0):
            return

        augmented = {}
        for i, vec in enumerate(self.generators):
            row = {j: domain.convert(value) for j, value in vec.items() if (value)}
            row[length + i] = domain.one
            augmented[i] = row
        reduced, pivots = DomainMatrix.from_dod(augmented, (count, length + count), domain).rref()
        reduced_rows = reduced.to_sparse().to_dod()
        independent = 0
        for r, p in enumerate(pivots):
            if (p >= length):
                break
            row = reduced_rows.get(r, {})
            self.echelon.append({j: v for j, v in row.items() if (j < length)})
            self.transform.append({j - length: v for j, v in row.items() if (j >= length)})
            self.pivots.append(p)
            independent += 1

        if (require_independent and independent != count):
            raise ClosureError(f"{count} vectors span only {independent} dimensions")

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: SparseVector) -> tuple[SparseVector, SparseVector]:
        """Reduce v against the echelon basis.

        Returns:
            tuple[SparseVector, SparseVector]:
                (echelon coordinates, residual). v lies in the span iff the residual is empty.
        """
        residual = dict(v)
        coords = {}
        for r, p in enumerate(self.pivots):
            c = residual.get(p)
            if (c):
                coords[r] = c
                residual = vector_add(residual, self.echelon[r], -c)
        return coords, residual

    def contains(self, v: SparseVector) -> bool:
        return not self.reduce(v)[1]

    def coordinates(self, v: SparseVector) -> SparseVector:
        """Coordinates of v with respect to the generating vectors.

        Raises:
            NotInvariantError:
                If v does not lie in the span.
        """
        coords, residual = self.reduce(v)
        if (residual):
            raise NotInvariantError("Vector does not lie in the span")
        out = {}
        for r, c in coords.items():
            out = vector_add(out, self.transform[r], c)
        return out

    def contains_span(self, other: "Span") -> bool:
        return all(self.contains(v) for v in other.echelon)

    def __eq__(self, other: object) -> bool:
        if (not isinstance(other, Span)):
            return NotImplemented
        return (
            self.length == other.length
            and self.pivots == other.pivots
            and self.echelon == other.echelon
        )

    def __hash__(self) -> int:
        return hash((self.length, tuple(self.pivots)))

    def __repr__(self) -> str:
        return f"Span<dim={self.dim}, length={self.length}, domain={self.domain}>"

def restrict(op: DomainMatrix, basis: DomainMatrix) -> DomainMatrix:
    """Matrix of op on the subspace spanned by the columns of basis.

    Solves basis * R = op * basis by one reduction of [basis | op * basis].

    Args:
        op (DomainMatrix):
            An N x N operator.
        basis (DomainMatrix):
            An N x d matrix with independent columns.

    Returns:
        DomainMatrix:
            The d x d restricted operator.

    Raises:
        DimensionMismatchError:
            If the sizes do not match.
        NotInvariantError:
            If op does not map the subspace into itself.
    """
    n, d = basis.shape
    if (op.shape != (n, n)):
        raise DimensionMismatchError(f"Operator of shape {op.shape} on a subspace of length {n}")
    if (d == 0):
        return zeros(0, 0, basis.domain)

    domain = op.domain.unify(basis.domain)
    basis = basis.convert_to(domain).to_sparse()
    image = op.convert_to(domain).to_sparse().matmul(basis)
    reduced, pivots = basis.hstack(image).to_field().rref()
    pivots = tuple(pivots)
    if (pivots[:d] != tuple(range(d))):
        raise ClosureError("Subspace basis is not linearly independent")
    if (len(pivots) > d):
        raise NotInvariantError("Operator does not preserve the subspace")
    return reduced.extract(list(range(d)), list(range(d, 2 * d))).to_sparse()

class Eigenline(NamedTuple):
    """A line on which every family member acts by a scalar."""
    vector: SparseVector
    eigenvalues: tuple

class EigenlineResult(NamedTuple):
    lines: list[Eigenline]
    complete: bool

def _rational_roots(m: DomainMatrix) -> tuple[list[Any], bool]:
    """Roots of the characteristic polynomial inside the domain of m.

    Returns:
        tuple[list, bool]:
            The distinct roots and whether every eigenvalue relevant to
            a real (QQ) or complex (QQ_I) line was found.
    """
    domain = m.domain
    x = sympy.Symbol("x")
    coeffs = [domain.to_sympy(c) for c in m.to_dense().charpoly()]
    _, factors = Poly(coeffs, x, domain=domain).factor_list()
    roots = []
    complete = True
    for factor, _ in factors:
        if (factor.degree() == 1):
            c1, c0 = factor.all_coeffs()
            roots.append(domain.from_sympy(-c0 / c1))
        elif (domain == QQ_I or factor.count_roots() > 0):
            # an eigenvalue outside the field
            complete = False
    return roots, complete

def _split(family: list[DomainMatrix], basis: DomainMatrix, eigenvalues: tuple,
           depth: int) -> tuple[list[tuple[DomainMatrix, tuple]], bool]:
    """Recursively split the coordinate subspace spanned by basis into common eigenspaces."""
    if (basis.shape[1] == 0):
        return [], True
    if (depth == len(family)):
        return [(basis, eigenvalues)], True

    op = restrict(family[depth], basis)
    domain = op.domain
    roots, complete = _rational_roots(op)
    logger.debug(f"Eigen-split at depth {depth} of a {op.shape[0]}-dim space: roots {[str(r) for r in roots]}")
    found = []
    for root in roots:
        shifted = op - identity(op.shape[0], domain).convert_to(domain) * root
        eigenspace = basis * kernel(shifted).convert_to(domain)
        pieces, sub_complete = _split(family, eigenspace, eigenvalues + (root,), depth + 1)
        found.extend(pieces)
        complete = complete and sub_complete
    return found, complete

def common_rational_eigenlines(family: Sequence[DomainMatrix], subspace: Union[DomainMatrix, Sequence[SparseVector]],
                               length: Optional[int] = None) -> EigenlineResult:
    """All lines in the subspace on which every member of a commuting family acts by a scalar.

    When a common eigenspace has dimension above one, every line in it is
    invariant; it is reported through its reduced echelon basis lines.

    Args:
        family (Sequence[DomainMatrix]):
            N x N operators that commute on the subspace.
        subspace (DomainMatrix | Sequence[SparseVector]):
            An N x d basis matrix, or a list of basis vectors of the given length.
        length (int, optional):
            The ambient length, needed when subspace is a list of vectors.

    Returns:
        EigenlineResult:
            The lines (normalized, first nonzero coordinate 1) with one eigenvalue
            per family member, and whether the search was complete.
            Over QQ, complete is False only when an irreducible factor of degree
            above one has a real root. Factors without real roots, such as
            x^2 + 1, carry no real line and leave complete True. Over QQ_I every
            such factor makes it False.

    Raises:
        NotInvariantError:
            If some family member does not preserve the subspace.
    """
    if (not isinstance(subspace, DomainMatrix)):
        if (length is None):
            raise InvalidParameterError("length is required for a list of basis vectors")
        domain = family[0].domain if (family) else QQ
        subspace = from_columns(subspace, length, domain)

    family = list(family)
    domain = subspace.domain
    for op in family:
        domain = domain.unify(op.domain)
    subspace = subspace.convert_to(domain)
    family = [op.convert_to(domain) for op in family]

    n, d = subspace.shape
    if (d == 0):
        return EigenlineResult(lines=[], complete=True)

    pieces, complete = _split(family, subspace, (), 0)
    lines = []
    for basis, eigenvalues in pieces:
        # canonical lines of the eigenspace
        echelon = Span(columns(basis), n, domain).echelon
        for vec in echelon:
            lines.append(Eigenline(vector=normalize_line(vec, domain), eigenvalues=eigenvalues))

    for line in lines:
        for op, value in zip(family, line.eigenvalues):
            image = apply(op, line.vector)
            if (image != vector_scale(line.vector, value)):
                raise NotInvariantError("A reported eigenline is not scaled by the family")

    lines.sort(key=lambda line: tuple((i, str(v)) for i, v in sorted(line.vector.items())))
    return EigenlineResult(lines=lines, complete=complete)

__all__ = [
    "SparseVector",
    "check_field",
    "as_scalar",
    "conjugate",
    "matrix",
    "from_dok",
    "identity",
    "zeros",
    "entries",
    "entry",
    "from_columns",
    "from_rows",
    "columns",
    "rows",
    "vector_add",
    "vector_scale",
    "apply",
    "normalize_line",
    "is_zero",
    "trace",
    "rank",
    "kernel",
    "kernel_vectors",
    "signature",
    "Span",
    "restrict",
    "Eigenline",
    "EigenlineResult",
    "common_rational_eigenlines"
]
