"""Exact Hermitian Laplacian analysis of oriented graphs over cyclotomic fields."""

from .cyclotomic import (
    CycloNum,
    RootParam,
    alpha,
    beta,
    conjugate,
    cycle_contribution,
    field_norm_q5,
    fold_index,
    galois_apply,
    golden_ratio,
    log_power_of,
    root_of_unity,
    sqrt5,
)
from .graph import (
    Component,
    ComponentClass,
    ComponentKind,
    OrientedGraph,
    Substructure,
    classify_component,
    components,
    find_cycle,
    is_all_regular,
    pendant_reduce,
)
from .hermitian import (
    HermitianMatrix,
    IncidenceMatrix,
    build_incidence,
    build_laplacian,
    determinant,
    laplacian_minor,
    numeric_determinant,
)
from .decomposition import (
    CensusEntry,
    cauchy_binet_expand,
    census,
    census_sum,
    structural_determinant,
)
from .enumeration import (
    FourVertexCounts,
    FourVertexSystem,
    PairClass,
    TriangleCounts,
    UnicyclicCounts,
    classify_pair,
    count_alpha_beta,
    four_vertex_count,
    four_vertex_system,
    galois_count,
    triangle_count,
)
from .matrixtree import (
    SpanningTreeReport,
    brute_force_spanning_trees,
    mtt_condition,
    spanning_trees_via_cofactor,
)

__version__ = "0.1.0"

__all__ = [
    "CycloNum",
    "RootParam",
    "alpha",
    "beta",
    "conjugate",
    "cycle_contribution",
    "field_norm_q5",
    "fold_index",
    "galois_apply",
    "golden_ratio",
    "log_power_of",
    "root_of_unity",
    "sqrt5",
    "Component",
    "ComponentClass",
    "ComponentKind",
    "OrientedGraph",
    "Substructure",
    "classify_component",
    "components",
    "find_cycle",
    "is_all_regular",
    "pendant_reduce",
    "HermitianMatrix",
    "IncidenceMatrix",
    "build_incidence",
    "build_laplacian",
    "determinant",
    "laplacian_minor",
    "numeric_determinant",
    "CensusEntry",
    "cauchy_binet_expand",
    "census",
    "census_sum",
    "structural_determinant",
    "FourVertexCounts",
    "FourVertexSystem",
    "PairClass",
    "TriangleCounts",
    "UnicyclicCounts",
    "classify_pair",
    "count_alpha_beta",
    "four_vertex_count",
    "four_vertex_system",
    "galois_count",
    "triangle_count",
    "SpanningTreeReport",
    "brute_force_spanning_trees",
    "mtt_condition",
    "spanning_trees_via_cofactor",
]
