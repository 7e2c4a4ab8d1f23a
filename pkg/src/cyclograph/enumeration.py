"""Counting applications built on the decomposition machinery.

The fifth-root methods classify cycle pairs (k, g) by k-2g mod 5, recover
(n_alpha, n_beta) from the exact determinants at the two conjugate fifth-root
parameters, and generalize to any odd prime p where the product of the
determinants over all Galois-conjugate parameters is exactly p**n_star.

The small-subset counters invert exact linear relations between principal
minors at several parameters and substructure multiplicities, optionally
cross-checked against the census oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional

from ._parallel import map_ordered
from .cyclotomic import (
    CycloNum,
    RootParam,
    alpha,
    beta,
    cycle_contribution,
    golden_ratio,
    log_power_of,
)
from .decomposition import CensusEntry, census, structural_determinant
from .errors import (
    CyclographError,
    NonIntegerResult,
    NonIntegerSolution,
    NotPrime,
    ParameterError,
    SizeMismatch,
    VanishingComponent,
)
from .graph import OrientedGraph, Substructure
from .hermitian import laplacian_minor

VERIFY_EDGE_LIMIT = 10


class PairClass(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    VANISHING = "vanishing"


def classify_pair(k: int, g: int) -> PairClass:
    """Class of a (cycle length, negative edges) pair at a fifth root:
    vanishing when 5 | k-2g, alpha for k-2g = 2,3 mod 5, beta for 1,4."""
    if not 0 <= g <= k // 2:
        raise ParameterError(f"negative-edge count {g} outside [0, {k // 2}]")
    r = (k - 2 * g) % 5
    if r == 0:
        return PairClass.VANISHING
    return PairClass.ALPHA if r in (2, 3) else PairClass.BETA


@dataclass(frozen=True)
class UnicyclicCounts:
    """Recovered unicyclic component counts; the conjugate-product method
    yields only the total, so n_alpha/n_beta are None on that path."""

    n_alpha: Optional[int]
    n_beta: Optional[int]
    n_star: int


def count_alpha_beta(sub: Substructure) -> UnicyclicCounts:
    """Recover (n_alpha, n_beta) from the determinants at the two conjugate
    fifth-root parameters.

    With d1, d2 the structural determinants at orders (5,1) and (5,2), the
    total is log5(d1*d2) and the difference is the exact power of phi^2 in
    d1/d2; the reconstruction alpha^n_alpha * beta^n_beta = d1 is verified
    before returning.
    """
    d1 = structural_determinant(sub, RootParam(5, 1))
    d2 = structural_determinant(sub, RootParam(5, 2))
    if d1.is_zero or d2.is_zero:
        raise VanishingComponent(
            "determinant vanished: the substructure has a vanishing unicyclic "
            "component or is not all-regular")
    total = log_power_of(d1 * d2, 5)
    diff = _phi_square_log(d1 / d2, total)
    if (total + diff) % 2:
        raise NonIntegerSolution(
            f"n_alpha + n_beta = {total} and n_alpha - n_beta = {diff} "
            "have no integer solution")
    n_alpha = (total + diff) // 2
    n_beta = (total - diff) // 2
    if n_alpha < 0 or n_beta < 0:
        raise NonIntegerSolution(
            f"recovered counts ({n_alpha}, {n_beta}) are negative")
    if (alpha() ** n_alpha) * (beta() ** n_beta) != d1:
        raise NonIntegerSolution(
            "reconstruction alpha^n_alpha * beta^n_beta does not match the "
            "determinant")
    return UnicyclicCounts(n_alpha, n_beta, n_alpha + n_beta)


def _phi_square_log(ratio: CycloNum, bound: int) -> int:
    """Exact exponent e with ratio = (phi^2)**e, |e| <= bound; found by
    repeated exact division (no float logarithms)."""
    one = CycloNum.rational(1)
    phi2 = golden_ratio() ** 2
    for direction in (1, -1):
        cur = ratio
        e = 0
        while e <= bound:
            if cur == one:
                return direction * e
            cur = cur / phi2 if direction == 1 else cur * phi2
            e += 1
    raise NonIntegerSolution(
        "determinant ratio is not an integer power of phi^2")


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def galois_count(sub: Substructure, p: int) -> UnicyclicCounts:
    """Count non-p-vanishing unicyclic components via the conjugate product:
    the product of the structural determinants at (p, q) for q = 1..(p-1)/2
    equals p**n_star exactly.

    Composite odd p is rejected (the power maps collapse into subfields and
    the product identity fails), as is any substructure with a p-vanishing
    component.
    """
    if not _is_odd_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    dets = map_ordered(
        lambda q: structural_determinant(sub, RootParam.make(p, q)),
        range(1, (p - 1) // 2 + 1))
    product = CycloNum.rational(1)
    for d in dets:
        if d.is_zero:
            raise VanishingComponent(
                "determinant vanished: the substructure has a p-vanishing "
                "unicyclic component or is not all-regular")
        product = product * d
    return UnicyclicCounts(None, None, log_power_of(product, p))


# ---------------------------------------------------------------------------
# triangle counting on 3-vertex subsets


class TriangleCounts(NamedTuple):
    triangles: int
    rootless_trees: int


def _integer_minor(graph: OrientedGraph, param: RootParam,
                   vset: Iterable[int]) -> int:
    value = laplacian_minor(graph, param, vset)
    if not value.is_rational or value.as_rational().denominator != 1:
        raise NonIntegerResult(f"minor at {param} is not an integer: {value}")
    return value.as_rational().numerator

def _census_count(entries: list[CensusEntry],
                  cycles: tuple[tuple[int, int, int], ...], forest: int) -> int:
    for e in entries:
        if e.cycles == cycles and e.forest_order == forest:
            return e.count
    return 0


def triangle_count(graph: OrientedGraph, vset: Iterable[int], *,
                   verify: bool = True) -> TriangleCounts:
    """Triangles and rootless trees spanned by a 3-vertex subset, from the
    exact minors at -1 and i: triangles = (m2 - m4)/2 and
    rootless_trees = 2*m4 - m2."""
    vlist = list(vset)
    if len(set(vlist)) != 3:
        raise SizeMismatch(f"triangle counting needs 3 vertices, got {vlist}")
    m2 = _integer_minor(graph, RootParam(2, 1), vlist)
    m4 = _integer_minor(graph, RootParam(4, 1), vlist)
    if (m2 - m4) % 2:
        raise NonIntegerResult(f"minor difference {m2 - m4} is odd")
    triangles = (m2 - m4) // 2
    rootless = 2 * m4 - m2
    if triangles < 0 or rootless < 0:
        raise NonIntegerResult(
            f"recovered counts ({triangles}, {rootless}) are negative")
    if verify and len(graph.edges) <= VERIFY_EDGE_LIMIT:
        entries = census(graph, vlist)
        expected_t = sum(e.count for e in entries
                         if e.kind == "unicyclic" and e.cycles[0][:2] == (3, 3))
        expected_f = _census_count(entries, (), 3)
        if (triangles, rootless) != (expected_t, expected_f):
            raise CyclographError(
                f"triangle counts ({triangles}, {rootless}) disagree with the "
                f"census ({expected_t}, {expected_f})")
    return TriangleCounts(triangles, rootless)


# ---------------------------------------------------------------------------
# the five-parameter system for 4-vertex subsets


@dataclass(frozen=True)
class FourVertexCounts:
    c440: int
    c441: int
    tu330: int
    tu331: int
    f4: int


@dataclass(frozen=True)
class FourVertexSystem:
    """The 5x5 linear system tying minors at the parameters of orders 2..6 to
    the multiplicities (#C(4,4,0), #C(4,4,1), #TU(3,3,0), #TU(3,3,1), #F(4))."""

    parameters: tuple[RootParam, ...]
    matrix: tuple[tuple[CycloNum, ...], ...]
    inverse: tuple[tuple[CycloNum, ...], ...]


@lru_cache(maxsize=1)
def four_vertex_system() -> FourVertexSystem:
    params = tuple(RootParam(n, 1) for n in (2, 3, 4, 5, 6))
    shapes = ((4, 0), (4, 1), (3, 0), (3, 1))
    one = CycloNum.rational(1)
    matrix = tuple(
        tuple(cycle_contribution(p, k, g) for k, g in shapes) + (one,)
        for p in params)
    inverse = _invert(matrix)
    return FourVertexSystem(params, matrix, inverse)


def _invert(matrix: tuple[tuple[CycloNum, ...], ...]) -> tuple[tuple[CycloNum, ...], ...]:
    size = len(matrix)
    zero = CycloNum.rational(0)
    one = CycloNum.rational(1)
    work = [list(row) + [one if i == j else zero for j in range(size)]
            for i, row in enumerate(matrix)]
    for col in range(size):
        piv = next(i for i in range(col, size) if not work[i][col].is_zero)
        work[col], work[piv] = work[piv], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv for x in work[col]]
        for i in range(size):
            if i != col and not work[i][col].is_zero:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return tuple(tuple(row[size:]) for row in work)


def four_vertex_count(graph: OrientedGraph, vset: Iterable[int], *,
                      verify: bool = True) -> FourVertexCounts:
    """Multiplicities of the five 4-vertex all-regular classes, recovered by
    applying the exact inverse of the five-parameter system to the minor
    vector at the parameters of orders 2..6."""
    vlist = list(vset)
    if len(set(vlist)) != 4:
        raise SizeMismatch(f"4-vertex counting needs 4 vertices, got {vlist}")
    system = four_vertex_system()
    dets = map_ordered(lambda p: laplacian_minor(graph, p, vlist),
                       system.parameters)
    values = []
    for row in system.inverse:
        acc = CycloNum.rational(0)
        for coef, det in zip(row, dets):
            acc = acc + coef * det
        if not acc.is_rational or acc.as_rational().denominator != 1 \
                or acc.as_rational() < 0:
            raise NonIntegerResult(
                f"recovered multiplicity {acc} is not a non-negative integer")
        values.append(acc.as_rational().numerator)
    counts = FourVertexCounts(*values)
    if verify and len(graph.edges) <= VERIFY_EDGE_LIMIT:
        entries = census(graph, vlist)
        expected = FourVertexCounts(
            c440=_census_count(entries, ((4, 4, 0),), 0),
            c441=_census_count(entries, ((4, 4, 1),), 0),
            tu330=_census_count(entries, ((3, 3, 0),), 1)
            + _census_count(entries, ((4, 3, 0),), 0),
            tu331=_census_count(entries, ((3, 3, 1),), 1)
            + _census_count(entries, ((4, 3, 1),), 0),
            f4=_census_count(entries, (), 4),
        )
        if counts != expected:
            raise CyclographError(
                f"4-vertex counts {counts} disagree with the census {expected}")
    return counts
