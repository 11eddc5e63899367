# import Python's standard libraries
import enum
import functools
from dataclasses import dataclass, field
from typing import Optional, Sequence

# import third-party libraries
import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher
from sympy import QQ, Matrix

# import local files
if (__package__ is None or __package__ == ""):
    from errors import InvalidParameterError
    from logger import logger
else:
    from .errors import InvalidParameterError
    from .logger import logger

EXCEPTIONAL_RANKS = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
CLASSICAL_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}

# the standard labelling isomorphisms outside the usual rank ranges
ALIASES = {
    ("C", 2): "B2",
    ("D", 2): "A1xA1",
    ("D", 3): "A3",
}

@enum.unique
class RepType(str, enum.Enum):
    """Classification of an irreducible representation under duality."""
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    NOT_SELF_DUAL = "not-self-dual"

Vector = tuple  # rational coordinates in the orthonormal epsilon basis

def _half(x: int) -> object:
    return QQ(x, 2)

def _unit(size: int, *terms: tuple[int, object]) -> Vector:
    vec = [QQ(0)] * size
    for index, coeff in terms:
        vec[index] += QQ.convert(coeff)
    return tuple(vec)

def _simple_roots(series: str, rank: int) -> list[Vector]:
    """Simple roots in the epsilon coordinates of the Bourbaki tables."""
    ell = rank
    if (series == "A"):
        return [_unit(ell + 1, (i, 1), (i + 1, -1)) for i in range(ell)]
    if (series in ("B", "C", "D")):
        roots = [_unit(ell, (i, 1), (i + 1, -1)) for i in range(ell - 1)]
        if (series == "B"):
            roots.append(_unit(ell, (ell - 1, 1)))
        elif (series == "C"):
            roots.append(_unit(ell, (ell - 1, 2)))
        else:
            roots.append(_unit(ell, (ell - 2, 1), (ell - 1, 1)))
        return roots
    if (series == "G2"):
        return [_unit(3, (0, 1), (1, -1)), _unit(3, (0, -2), (1, 1), (2, 1))]
    if (series == "F4"):
        half = _half(1)
        return [
            _unit(4, (1, 1), (2, -1)),
            _unit(4, (2, 1), (3, -1)),
            _unit(4, (3, 1)),
            _unit(4, (0, half), (1, -half), (2, -half), (3, -half)),
        ]
    # E6, E7 and E8 are the first 6, 7 and 8 simple roots of E8
    half = _half(1)
    e8 = [
        _unit(8, (0, half), (7, half), *((i, -half) for i in range(1, 7))),
        _unit(8, (0, 1), (1, 1)),
    ] + [_unit(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
    return e8[:EXCEPTIONAL_RANKS[series]]

def inner(u: Vector, v: Vector) -> object:
    return sum((a * b for a, b in zip(u, v)), QQ(0))

def combine(coeffs: Sequence[object], vectors: Sequence[Vector]) -> Vector:
    size = len(vectors[0])
    out = [QQ(0)] * size
    for c, vec in zip(coeffs, vectors):
        if (c):
            for k in range(size):
                out[k] += c * vec[k]
    return tuple(out)

def normalize_type(type_label: str, rank: Optional[int]) -> tuple[str, int]:
    """Normalize a user type label such as "B", "e", "E7" or "G2" with a rank.

    Returns:
        tuple[str, int]:
            (series, rank), where series is one of A, B, C, D, G2, F4, E6, E7, E8.

    Raises:
        InvalidParameterError:
            If the (type, rank) pair is invalid.
    """
    label = str(type_label).strip().upper()
    if (label in EXCEPTIONAL_RANKS):
        fixed = EXCEPTIONAL_RANKS[label]
        if (rank is not None and rank != fixed):
            raise InvalidParameterError(f"{label} has rank {fixed}, not {rank}")
        return label, fixed
    if (label in ("E", "F", "G")):
        if (rank is None):
            raise InvalidParameterError(f"Type {label} needs a rank")
        return normalize_type(f"{label}{rank}", rank)
    if (label not in CLASSICAL_MIN_RANK):
        raise InvalidParameterError(f"Unknown root system type: {type_label!r}")
    if (rank is None or rank < CLASSICAL_MIN_RANK[label]):
        raise InvalidParameterError(
            f"Type {label} needs rank at least {CLASSICAL_MIN_RANK[label]}, got {rank}"
        )
    return label, rank

@dataclass(frozen=True, repr=False)
class RootSystem:
    """A reduced root system with its Bourbaki-ordered simple roots.

    Roots are stored as integer coefficient tuples over the simple roots.
    """
    series: str
    rank: int
    simple_roots: tuple[Vector, ...]
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[tuple[int, ...], ...]
    highest_root: Optional[tuple[int, ...]]
    rho: Vector
    alias: Optional[str] = None
    positive_roots: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def label(self) -> str:
        if (self.series in EXCEPTIONAL_RANKS):
            return self.series
        return f"{self.series}{self.rank}"

    def root_vector(self, coeffs: Sequence[int]) -> Vector:
        return combine([QQ(c) for c in coeffs], self.simple_roots)

    def height(self, coeffs: Sequence[int]) -> int:
        return sum(coeffs)

    @functools.cached_property
    def fundamental_weights(self) -> tuple[Vector, ...]:
        """lambda_i = sum_j (A^-1)_ij alpha_j in epsilon coordinates."""
        inverse = Matrix(self.cartan).inv()
        weights = []
        for i in range(self.rank):
            coeffs = [QQ.from_sympy(inverse[i, j]) for j in range(self.rank)]
            weights.append(combine(coeffs, self.simple_roots))
        return tuple(weights)

    def weight_vector(self, weight: Sequence[int]) -> Vector:
        return combine([QQ(r) for r in weight], self.fundamental_weights)

    def __repr__(self) -> str:
        alias = f", alias={self.alias}" if (self.alias) else ""
        return f"RootSystem<{self.label}, roots={len(self.roots)}{alias}>"

def cartan_from_roots(simple_roots: Sequence[Vector]) -> tuple[tuple[int, ...], ...]:
    """A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)."""
    out = []
    for a in simple_roots:
        row = []
        for b in simple_roots:
            value = 2 * inner(a, b) / inner(b, b)
            if (value.denominator != 1):
                raise InvalidParameterError("Simple roots give a non-integral Cartan matrix")
            row.append(int(value.numerator))
        out.append(tuple(row))
    return tuple(out)

def reflection_closure(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All roots, in simple-root coefficients, generated by simple reflections.

    The reflection s_i acts by m_i -> m_i - sum_j m_j A_ji.
    """
    rank = len(cartan)
    simple = [tuple(1 if (k == i) else 0 for k in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while (frontier):
        nxt = []
        for root in frontier:
            for i in range(rank):
                pairing = sum(root[j] * cartan[j][i] for j in range(rank))
                if (pairing == 0):
                    continue
                image = list(root)
                image[i] -= pairing
                image = tuple(image)
                if (image not in seen):
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))

@functools.lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: Optional[int] = None) -> RootSystem:
    """Build the root system of the given type and rank.

    Args:
        type_label (str):
            A, B, C, D, E6, E7, E8, F4 or G2 (case-insensitive; "E" with a rank also works).
        rank (int | None):
            The rank; optional for exceptional labels.

    Returns:
        RootSystem:
            The roots generated by reflection closure, the highest root
            (None when the system is reducible, as for D2) and rho.

    Raises:
        InvalidParameterError:
            If the (type, rank) pair is invalid.
    """
    series, rank = normalize_type(type_label, rank)
    simple = _simple_roots(series, rank)
    cartan = cartan_from_roots(simple)
    roots = reflection_closure(cartan)
    positive = tuple(r for r in roots if (all(c >= 0 for c in r)))

    heights = [sum(r) for r in positive]
    top = [r for r in positive if (sum(r) == max(heights))]
    highest = top[0] if (len(top) == 1) else None

    rho = combine([QQ(1, 2)] * len(positive), [combine([QQ(c) for c in r], simple) for r in positive])
    rs = RootSystem(
        series=series,
        rank=rank,
        simple_roots=tuple(simple),
        cartan=cartan,
        roots=tuple(roots),
        highest_root=highest,
        rho=rho,
        alias=ALIASES.get((series, rank)),
        positive_roots=positive,
    )
    logger.debug(f"Built {rs!r}")
    return rs

def classical_root_count(series: str, rank: int) -> int:
    """|Delta| from the closed forms, for cross-checks."""
    ell = rank
    table = {
        "A": ell * (ell + 1),
        "B": 2 * ell * ell,
        "C": 2 * ell * ell,
        "D": 2 * ell * (ell - 1),
    }
    if (series in table):
        return table[series]
    return {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}[series]

def algebra_dim(series: str, rank: int) -> int:
    """Dimension of the simple (or D2/D1 degenerate) Lie algebra of the given type."""
    ell = rank
    if (series == "A"):
        return ell * (ell + 2)
    if (series in ("B", "C")):
        return ell * (2 * ell + 1)
    if (series == "D"):
        return ell * (2 * ell - 1)
    return {"G2": 14, "F4": 52, "E6": 78, "E7": 133, "E8": 248}[series]

def extended_cartan(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the extended simple system with alpha_0 = -highest root at index 0.

    Raises:
        InvalidParameterError:
            If the root system has no highest root.
    """
    if (rs.highest_root is None):
        raise InvalidParameterError(f"{rs.label} is not simple and has no highest root")
    lowest = tuple(-c for c in rs.root_vector(rs.highest_root))
    return cartan_from_roots((lowest,) + rs.simple_roots)

def dynkin_graph(cartan: Sequence[Sequence[int]]) -> nx.DiGraph:
    """Directed graph with an edge i -> j weighted by A_ij for each nonzero off-diagonal entry."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(cartan)))
    for i, row in enumerate(cartan):
        for j, value in enumerate(row):
            if (i != j and value):
                graph.add_edge(i, j, weight=value)
    return graph

def diagram_automorphisms(cartan: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    """All node permutations preserving the Cartan matrix."""
    graph = dynkin_graph(cartan)
    matcher = DiGraphMatcher(graph, graph, edge_match=lambda a, b: a["weight"] == b["weight"])
    return [dict(mapping) for mapping in matcher.isomorphisms_iter()]

def diagram_automorphism_orbits(rs: RootSystem) -> list[tuple[int, ...]]:
    """Orbits of 0-based simple-root indices under diagram automorphisms (D4 gives triality)."""
    orbits = []
    placed = set()
    automorphisms = diagram_automorphisms(rs.cartan)
    for node in range(rs.rank):
        if (node in placed):
            continue
        orbit = tuple(sorted({auto[node] for auto in automorphisms}))
        placed.update(orbit)
        orbits.append(orbit)
    return orbits

def check_weight(rs: RootSystem, weight: Sequence[int]) -> tuple[int, ...]:
    """Validate a dominant integral weight given by its coefficients r_i.

    Raises:
        InvalidParameterError:
            If the length differs from the rank or some coefficient is negative.
    """
    weight = tuple(int(r) for r in weight)
    if (len(weight) != rs.rank):
        raise InvalidParameterError(f"{rs.label} needs {rs.rank} weight coefficients, got {len(weight)}")
    if (any(r < 0 for r in weight)):
        raise InvalidParameterError(f"Weight {weight} is not dominant")
    return weight

def weyl_dim(rs: RootSystem, weight: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight sum r_i lambda_i.

    Args:
        rs (RootSystem):
            The root system.
        weight (Sequence[int]):
            The coefficients r_i, all nonnegative.

    Returns:
        int:
            prod over positive roots of (lambda + rho, alpha) / (rho, alpha).
    """
    weight = check_weight(rs, weight)
    shifted = combine([QQ(1), QQ(1)], [rs.weight_vector(weight), rs.rho])
    value = QQ(1)
    for root in rs.positive_roots:
        alpha = rs.root_vector(root)
        value *= inner(shifted, alpha) / inner(rs.rho, alpha)
    if (value.denominator != 1):
        raise ArithmeticError(f"Weyl dimension formula gave {value}")
    return int(value.numerator)

def reflect_weight(rs: RootSystem, weight: Sequence[int], i: int) -> tuple[int, ...]:
    """s_i on fundamental-weight coordinates: r_j -> r_j - r_i A_ij."""
    r_i = weight[i]
    return tuple(weight[j] - r_i * rs.cartan[i][j] for j in range(rs.rank))

@functools.lru_cache(maxsize=None)
def longest_element_word(rs: RootSystem) -> tuple[int, ...]:
    """A reduced word for w0, found by reflecting rho down to -rho."""
    current = tuple([1] * rs.rank)
    word = []
    while (True):
        step = next((i for i in range(rs.rank) if (current[i] > 0)), None)
        if (step is None):
            break
        current = reflect_weight(rs, current, step)
        word.append(step)
    return tuple(word)

def duality(rs: RootSystem, weight: Sequence[int]) -> tuple[int, ...]:
    """The highest weight -w0(lambda) of the dual representation."""
    current = tuple(weight)
    for step in longest_element_word(rs):
        current = reflect_weight(rs, current, step)
    return tuple(-r for r in current)

def parity_combination(rs: RootSystem) -> tuple[int, ...]:
    """1-based indices i whose r_i sum decides orthogonal vs symplectic.

    An empty tuple means every self-dual irrep of the type is orthogonal.
    The E7 row is r2 + r5 + r7, the odd coefficients of 2 rho^vee.
    """
    ell = rs.rank
    series = rs.series
    if (series == "A" and ell % 4 == 1):
        return ((ell + 1) // 2,)
    if (series == "B" and ell % 4 in (1, 2)):
        return (ell,)
    if (series == "C"):
        return tuple(range(1, ell + 1, 2))
    if (series == "D" and ell % 4 == 2):
        return (ell - 1, ell)
    if (series == "E7"):
        return (2, 5, 7)
    return ()

@functools.lru_cache(maxsize=None)
def two_rho_coroot(rs: RootSystem) -> tuple[int, ...]:
    """Coefficients of the sum of positive coroots over the simple coroots."""
    lengths = [inner(a, a) for a in rs.simple_roots]
    out = [QQ(0)] * rs.rank
    for root in rs.positive_roots:
        norm = inner(rs.root_vector(root), rs.root_vector(root))
        for i, m in enumerate(root):
            out[i] += m * lengths[i] / norm
    return tuple(int(c.numerator) for c in out)

def coroot_parity(rs: RootSystem, weight: Sequence[int]) -> int:
    """<lambda, 2 rho^vee> mod 2."""
    weight = check_weight(rs, weight)
    return sum(r * c for r, c in zip(weight, two_rho_coroot(rs))) % 2

def rep_type(rs: RootSystem, weight: Sequence[int]) -> RepType:
    """Orthogonal, symplectic or not self-dual, for the irrep of highest weight lambda."""
    weight = check_weight(rs, weight)
    if (duality(rs, weight) != weight):
        return RepType.NOT_SELF_DUAL
    combination = parity_combination(rs)
    parity = sum(weight[i - 1] for i in combination) % 2
    return RepType.SYMPLECTIC if (parity) else RepType.ORTHOGONAL

__all__ = [
    "EXCEPTIONAL_RANKS",
    "RepType",
    "RootSystem",
    "inner",
    "combine",
    "normalize_type",
    "cartan_from_roots",
    "reflection_closure",
    "build_root_system",
    "classical_root_count",
    "algebra_dim",
    "extended_cartan",
    "dynkin_graph",
    "diagram_automorphisms",
    "diagram_automorphism_orbits",
    "check_weight",
    "weyl_dim",
    "reflect_weight",
    "longest_element_word",
    "duality",
    "parity_combination",
    "two_rho_coroot",
    "coroot_parity",
    "rep_type"
]
