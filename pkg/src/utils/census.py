# import Python's standard libraries
import enum
import math
import functools
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

# import third-party libraries
import networkx as nx

# import local files
if (__package__ is None or __package__ == ""):
    from roots import (
        RootSystem, build_root_system, algebra_dim, extended_cartan, dynkin_graph,
        diagram_automorphism_orbits, weyl_dim, rep_type, RepType
    )
    from errors import InvalidParameterError
    from constants import CONSTANTS as C
    from logger import logger
else:
    from .roots import (
        RootSystem, build_root_system, algebra_dim, extended_cartan, dynkin_graph,
        diagram_automorphism_orbits, weyl_dim, rep_type, RepType
    )
    from .errors import InvalidParameterError
    from .constants import CONSTANTS as C
    from .logger import logger

@enum.unique
class SubalgebraProvenance(str, enum.Enum):
    """How a reductive subalgebra descriptor was obtained."""
    LEVI = "levi"
    PI_SYSTEM_I = "pi-system-I"
    PI_SYSTEM_II = "pi-system-II"
    REDUCIBLE_BLOCK = "reducible-block"
    IRREDUCIBLE_NONSIMPLE = "irreducible-nonsimple"
    IRREDUCIBLE_SIMPLE = "irreducible-simple"

@enum.unique
class BoundCase(str, enum.Enum):
    RIEMANNIAN = "riemannian"
    LORENTZIAN = "lorentzian"
    OTHER_SIGNATURE = "other-signature"

Factor = tuple[str, int]

def normalize_factor(series: str, rank: int) -> tuple[list[Factor], int]:
    """Rewrite a classical factor through the low-rank isomorphisms.

    Args:
        series (str):
            A Lie type series, or "so"/"sp" for so(d)/sp(d) with rank read as d.
        rank (int):
            The rank (or the matrix size for so/sp).

    Returns:
        tuple[list[Factor], int]:
            The simple factors and the extra center dimension (so(2) = D1 is abelian).
    """
    if (series == "so"):
        if (rank < 2):
            return [], 0
        return normalize_factor("B", (rank - 1) // 2) if (rank % 2) else normalize_factor("D", rank // 2)
    if (series == "sp"):
        if (rank % 2):
            raise InvalidParameterError(f"sp({rank}) needs an even size")
        return normalize_factor("C", rank // 2)
    if (rank == 0):
        return [], 0
    if (series == "D" and rank == 1):
        return [], 1
    if (series == "D" and rank == 2):
        return [("A", 1), ("A", 1)], 0
    if (series == "D" and rank == 3):
        return [("A", 3)], 0
    if (series in ("B", "C") and rank == 1):
        return [("A", 1)], 0
    if (series == "C" and rank == 2):
        return [("B", 2)], 0
    return [(series, rank)], 0

def factor_label(factor: Factor) -> str:
    series, rank = factor
    return series if (series[0] in "EFG") else f"{series}{rank}"

@dataclass(frozen=True)
class SubalgebraDescriptor:
    """Abstract type of a reductive subalgebra: simple factors plus a center.

    Factors are stored in normalized sorted form, so equal abstract types
    compare equal. module_dims holds the dimensions of the irreducible summands
    of the ambient standard module when the subalgebra sits inside so(n).
    """
    factors: tuple[Factor, ...]
    center: int
    provenance: SubalgebraProvenance
    name: str = ""
    note: str = ""
    module_dims: tuple[int, ...] = field(default=())

    @classmethod
    def build(cls, labels: Sequence[Factor], center: int, provenance: SubalgebraProvenance,
              name: str = "", note: str = "", module_dims: Sequence[int] = ()) -> "SubalgebraDescriptor":
        factors = []
        for series, rank in labels:
            simple, extra = normalize_factor(series, rank)
            factors.extend(simple)
            center += extra
        return cls(
            factors=tuple(sorted(factors)),
            center=center,
            provenance=provenance,
            name=name,
            note=note,
            module_dims=tuple(sorted(module_dims)),
        )

    @property
    def dim(self) -> int:
        return self.center + sum(algebra_dim(s, r) for s, r in self.factors)

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.factors)

    @property
    def type_label(self) -> str:
        parts = []
        if (self.center == 1):
            parts.append("C")
        elif (self.center > 1):
            parts.append(f"C^{self.center}")
        parts.extend(factor_label(f) for f in self.factors)
        return "x".join(parts) if (parts) else "0"

    def type_key(self) -> tuple:
        return (self.factors, self.center)

    def __str__(self) -> str:
        name = f"{self.name} " if (self.name) else ""
        return f"{name}[{self.type_label}, dim {self.dim}, {self.provenance.value}]"

def _candidate_systems(rank: int) -> list[RootSystem]:
    """Connected Dynkin types of a given rank, with B2 before C2 and A3 before D3."""
    labels = [("A", rank)]
    if (rank >= 2):
        labels.append(("B", rank))
    if (rank >= 3):
        labels.append(("C", rank))
    if (rank >= 4):
        labels.append(("D", rank))
    labels.extend((s, r) for s, r in (("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)) if (r == rank))
    return [build_root_system(s, r) for s, r in labels]

def _edge_match(a: dict, b: dict) -> bool:
    return a["weight"] == b["weight"]

@functools.lru_cache(maxsize=None)
def identify_cartan(cartan: tuple[tuple[int, ...], ...]) -> tuple[Factor, ...]:
    """Identify the simple types of a (possibly reducible) Cartan matrix.

    Each connected component is matched against every connected type of
    the same rank by weighted digraph isomorphism, so node order is irrelevant.

    Raises:
        InvalidParameterError:
            If a component has no match or the rank exceeds the supported range.
    """
    graph = dynkin_graph(cartan)
    found = []
    for component in nx.connected_components(graph.to_undirected()):
        nodes = sorted(component)
        rank = len(nodes)
        if (rank > C.MAX_RECOGNISED_RANK):
            raise InvalidParameterError(f"Cannot recognise a component of rank {rank}")
        sub = graph.subgraph(nodes)
        for rs in _candidate_systems(rank):
            if (nx.is_isomorphic(sub, dynkin_graph(rs.cartan), edge_match=_edge_match)):
                found.append((rs.series, rs.rank))
                break
        else:
            raise InvalidParameterError(f"Unrecognised Cartan component on nodes {nodes}")
    return tuple(sorted(found))

def _minor(cartan: Sequence[Sequence[int]], drop: int) -> tuple[tuple[int, ...], ...]:
    keep = [i for i in range(len(cartan)) if (i != drop)]
    return tuple(tuple(cartan[i][j] for j in keep) for i in keep)

def levi_factor(type_label: str, rank: int, node: int) -> SubalgebraDescriptor:
    """Levi factor of the maximal parabolic obtained by crossing one node.

    Args:
        type_label (str):
            The ambient type (any type; the table cross-check covers B and D).
        rank (int):
            The ambient rank.
        node (int):
            The crossed node k, 1-based in the Bourbaki ordering.

    Returns:
        SubalgebraDescriptor:
            Center of dimension 1 and the semisimple part read off the decrossed diagram.

    Raises:
        InvalidParameterError:
            If the node is out of range.
    """
    rs = build_root_system(type_label, rank)
    if (not 1 <= node <= rs.rank):
        raise InvalidParameterError(f"Node {node} is out of range for {rs.label}")
    factors = identify_cartan(_minor(rs.cartan, node - 1)) if (rs.rank > 1) else ()
    return SubalgebraDescriptor.build(
        factors, 1, SubalgebraProvenance.LEVI, name=f"levi({rs.label}, k={node})", note=f"k={node}"
    )

def levi_table_dim(series: str, rank: int, node: int) -> int:
    """Dimension of the Levi factor from the closed forms for B and D."""
    ell, k = rank, node
    if (series == "B"):
        return k * k + math.comb(2 * ell - 2 * k + 1, 2)
    if (series == "D"):
        if (k >= ell - 1):
            return ell * ell
        return k * k + math.comb(2 * ell - 2 * k, 2)
    raise InvalidParameterError(f"No Levi table for type {series}")

def _is_prime(value: int) -> bool:
    return value >= 2 and all(value % p for p in range(2, math.isqrt(value) + 1))

def max_regular_reductive(rs: RootSystem) -> list[SubalgebraDescriptor]:
    """Maximal regular reductive subalgebras from the pi-systems of types I and II.

    Type I removes a node with highest-root coefficient 1 (rank l-1, center 1);
    type II removes a node with prime coefficient from the extended diagram
    (rank l, center 0).

    Args:
        rs (RootSystem):
            A simple root system.

    Returns:
        list[SubalgebraDescriptor]:
            One descriptor per qualifying node, in node order.
    """
    if (rs.highest_root is None):
        raise InvalidParameterError(f"{rs.label} is not simple")

    out = []
    extended = extended_cartan(rs)
    for k, coeff in enumerate(rs.highest_root, start=1):
        if (coeff == 1):
            factors = identify_cartan(_minor(rs.cartan, k - 1)) if (rs.rank > 1) else ()
            out.append(SubalgebraDescriptor.build(
                factors, 1, SubalgebraProvenance.PI_SYSTEM_I, name=f"{rs.label} k={k}", note=f"k={k}"
            ))
        elif (_is_prime(coeff)):
            # a prime n_k gives a maximal pi-system; composite n_k sits inside the one for a prime divisor
            factors = identify_cartan(_minor(extended, k))
            out.append(SubalgebraDescriptor.build(
                factors, 0, SubalgebraProvenance.PI_SYSTEM_II, name=f"{rs.label} k={k}", note=f"k={k}"
            ))
        else:
            logger.debug(f"{rs.label}: node {k} has coefficient {coeff}, giving no maximal subalgebra")
    return out

def pi_system_roots(rs: RootSystem, node: int, kind: SubalgebraProvenance) -> list[tuple[int, ...]]:
    """The root subsystem attached to a pi-system, as a set of roots of rs.

    Type I keeps the roots with m_k = 0; type II keeps those with m_k divisible by n_k.
    """
    n_k = rs.highest_root[node - 1]
    if (kind == SubalgebraProvenance.PI_SYSTEM_I):
        return [r for r in rs.roots if (r[node - 1] == 0)]
    return [r for r in rs.roots if (r[node - 1] % n_k == 0)]

def is_closed_symmetric(rs: RootSystem, subset: Sequence[tuple[int, ...]]) -> bool:
    """Whether a set of roots is closed under negation and under sums that are roots."""
    members = set(subset)
    all_roots = set(rs.roots)
    for a in members:
        if (tuple(-c for c in a) not in members):
            return False
        for b in members:
            total = tuple(x + y for x, y in zip(a, b))
            if (total in all_roots and total not in members):
                return False
    return True

class Bounds(NamedTuple):
    c: int
    c0: int
    submaximal: int
    upper: int

def bounds(n: int, case: str) -> Bounds:
    """The symmetry dimension c(n), the isotropy bound c0(n) = c(n) - n, and S(n) = U(n) = c(n).

    Raises:
        InvalidParameterError:
            If n < 4 or the case is unknown.
    """
    if (n < 4):
        raise InvalidParameterError(f"Bounds need n >= 4, got {n}")
    try:
        case = BoundCase(case)
    except (ValueError):
        raise InvalidParameterError(f"Unknown case {case!r}")

    if (case == BoundCase.RIEMANNIAN):
        c = (n * n) // 4 + n if (n in (4, 6)) else math.comb(n - 1, 2) + 3
    elif (case == BoundCase.LORENTZIAN):
        c = math.comb(n - 1, 2) + 4
    else:
        c = math.comb(n - 1, 2) + 6
    return Bounds(c=c, c0=c - n, submaximal=c, upper=c)

class Rejection(NamedTuple):
    descriptor: SubalgebraDescriptor
    reason: str

class AdmissibleReport(NamedTuple):
    n: int
    c0: int
    retained: list[SubalgebraDescriptor]
    rejected: list[Rejection]
    citations: list[str]

def orthogonal_type(n: int) -> tuple[str, int]:
    """(series, rank) of so(n, C)."""
    return ("B", (n - 1) // 2) if (n % 2) else ("D", n // 2)

def _block_candidates(n: int) -> list[SubalgebraDescriptor]:
    out = []
    for k in range(1, n // 2 + 1):
        dims = []
        for size in (k, n - k):
            dims.extend([1, 1] if (size == 2) else [size])
        out.append(SubalgebraDescriptor.build(
            [("so", k), ("so", n - k)], 0, SubalgebraProvenance.REDUCIBLE_BLOCK,
            name=f"so({n - k},C)" if (k == 1) else f"so({k},C)xso({n - k},C)",
            note=f"k={k}", module_dims=dims,
        ))
    return out

def _levi_candidates(n: int) -> list[SubalgebraDescriptor]:
    series, ell = orthogonal_type(n)
    rs = build_root_system(series, ell)
    out = []
    for orbit in diagram_automorphism_orbits(rs):
        k = orbit[0] + 1
        descriptor = levi_factor(series, ell, k)
        if (series == "D" and k >= ell - 1):
            dims = [ell, ell]
        else:
            dims = [k, k] + ([n - 2 * k] if (n - 2 * k) else [])
        nodes = ",".join(str(i + 1) for i in orbit)
        out.append(replace(
            descriptor,
            name=f"gl({k},C)" if (dims == [k, k]) else f"levi k={k}",
            note=f"k in {{{nodes}}}",
            module_dims=tuple(sorted(dims)),
        ))
    return out

def _nonsimple_candidates(n: int) -> list[SubalgebraDescriptor]:
    out = []
    for d1 in range(2, math.isqrt(n) + 1):
        if (n % d1):
            continue
        d2 = n // d1
        out.append(SubalgebraDescriptor.build(
            [("so", d1), ("so", d2)], 0, SubalgebraProvenance.IRREDUCIBLE_NONSIMPLE,
            name=f"so({d1})xso({d2})", module_dims=[n],
        ))
        if (d1 % 2 == 0 and d2 % 2 == 0):
            out.append(SubalgebraDescriptor.build(
                [("sp", d1), ("sp", d2)], 0, SubalgebraProvenance.IRREDUCIBLE_NONSIMPLE,
                name=f"sp({d1})xsp({d2})", module_dims=[n],
            ))
    return out

def irreducible_simple_list(cap: int) -> list[tuple[str, int, tuple[int, ...]]]:
    """Orthogonal irreps with dim V < dim f < dim so(V), up to dim V <= cap."""
    out = [("B", 3, (0, 0, 1)), ("B", 4, (0, 0, 0, 1)), ("G2", 2, (1, 0)), ("F4", 4, (0, 0, 0, 1))]
    ell = 3
    while (math.comb(2 * ell, 2) - 1 <= cap):
        weight = tuple(1 if (i == 1) else 0 for i in range(ell))
        out.append(("C", ell, weight))
        ell += 1
    return out

# candidates known not to be visible from outside the dimension screen
CITED_NOT_VISIBLE = {
    ("G2", 7): "reductive subalgebras of g2 have dimension at most 8 and its S-subalgebras at most 3; "
               "fixed_space(g2, W(7)) = 0",
}

def admissible_report(n: int, cap: int = C.DEFAULT_CENSUS_CAP) -> AdmissibleReport:
    """All reductive subalgebras of so(n, C) of dimension at least c0(n), up to the standard screens.

    Candidates are merged only when the abstract type and the standard-module
    summand dimensions agree. The irreducible so(8) candidate (B3, lambda_3)
    merges with so(7, C) through triality.

    Args:
        n (int):
            The ambient size, 5 <= n <= cap.
        cap (int):
            The configured census cap.

    Returns:
        AdmissibleReport:
            Retained candidates sorted by dimension (descending) and the rejection log.
    """
    if (not C.MIN_CENSUS_N <= n <= cap):
        raise InvalidParameterError(f"admissible_report needs {C.MIN_CENSUS_N} <= n <= {cap}, got {n}")

    c0 = bounds(n, BoundCase.RIEMANNIAN).c0
    retained: dict[tuple, SubalgebraDescriptor] = {}
    rejected = []
    citations = [
        "reductive subalgebras of so(p,q) are conjugate into a compact form (cited, not re-proved)",
        "the Table S-ns maximality footnotes are not re-derived; candidates are screened by dimension",
    ]

    def consider(descriptor: SubalgebraDescriptor) -> None:
        if (descriptor.dim < c0):
            reason = f"dim {descriptor.dim} < c0 {c0}"
            rejected.append(Rejection(descriptor, reason))
            logger.info(f"n={n}: rejected {descriptor} ({reason})")
            return
        key = (descriptor.type_key(), descriptor.module_dims)
        if (key in retained):
            first = retained[key]
            retained[key] = replace(first, note=f"{first.note}; merged {descriptor.provenance.value} {descriptor.note}".strip("; "))
            return
        retained[key] = descriptor

    for descriptor in _block_candidates(n) + _levi_candidates(n) + _nonsimple_candidates(n):
        consider(descriptor)

    for series, rank, weight in irreducible_simple_list(cap):
        rs = build_root_system(series, rank)
        if (weyl_dim(rs, weight) != n):
            continue
        descriptor = SubalgebraDescriptor.build(
            [(series, rank)], 0, SubalgebraProvenance.IRREDUCIBLE_SIMPLE,
            name=f"({rs.label}, {weight})", module_dims=[n],
        )
        if (rep_type(rs, weight) != RepType.ORTHOGONAL):
            rejected.append(Rejection(descriptor, "not orthogonal"))
            continue
        cited = CITED_NOT_VISIBLE.get((rs.label, n))
        if (cited is not None):
            rejected.append(Rejection(descriptor, f"cited: {cited}"))
            citations.append(cited)
            continue
        if (n == 8 and rs.label == "B3"):
            key = (((("B", 3),), 0), (1, 7))
            if (key in retained):
                first = retained[key]
                retained[key] = replace(first, note=f"{first.note}; merged {descriptor.name} by triality".strip("; "))
                continue
        consider(descriptor)

    ordered = sorted(retained.values(), key=lambda d: (-d.dim, d.type_label, d.module_dims))
    return AdmissibleReport(n=n, c0=c0, retained=ordered, rejected=rejected, citations=citations)

__all__ = [
    "SubalgebraProvenance",
    "BoundCase",
    "normalize_factor",
    "factor_label",
    "SubalgebraDescriptor",
    "identify_cartan",
    "levi_factor",
    "levi_table_dim",
    "max_regular_reductive",
    "pi_system_roots",
    "is_closed_symmetric",
    "Bounds",
    "bounds",
    "Rejection",
    "AdmissibleReport",
    "orthogonal_type",
    "irreducible_simple_list",
    "admissible_report"
]
