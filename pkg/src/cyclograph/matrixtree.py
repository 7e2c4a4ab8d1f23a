"""A Matrix-Tree analog for the parameterized Hermitian Laplacian.

When every cycle of the graph has a vanishing contribution at the chosen
parameter, every cofactor of the Laplacian equals the number of spanning
trees of the underlying graph (at omega = 1 this is the classical theorem
and holds unconditionally).  A brute-force subset counter serves as oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .cyclotomic import RootParam
from .errors import GuardrailExceeded, InputError, NonIntegerResult, UnknownVertex
from .graph import OrientedGraph
from .hermitian import laplacian_minor

CYCLE_GUARDRAIL = 100_000


@dataclass(frozen=True)
class SpanningTreeReport:
    """Cofactor value with the condition flag; when condition_holds the count
    is the spanning-tree number and is identical for every deleted vertex."""

    count: int
    condition_holds: bool
    parameter: RootParam
    deleted_vertex: int

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "condition_holds": self.condition_holds,
            "parameter": self.parameter.to_json(),
            "deleted_vertex": self.deleted_vertex,
        }


def mtt_condition(graph: OrientedGraph, param: RootParam, *,
                  force: bool = False) -> bool:
    """True when every cycle of the underlying graph vanishes at param, i.e.
    order divides power*(k-2g) for the cycle's oriented shape.  At omega = 1
    this holds for every graph without enumeration."""
    if param.is_one:
        return True
    n, q = param.order, param.power
    g_undirected = nx.Graph()
    g_undirected.add_nodes_from(graph.vertices)
    g_undirected.add_edges_from(graph.edges)
    dirs = set(graph.edges)
    seen = 0
    for cyc in nx.simple_cycles(g_undirected):
        seen += 1
        if seen > CYCLE_GUARDRAIL and not force:
            raise GuardrailExceeded(
                f"more than {CYCLE_GUARDRAIL} cycles; pass force=True "
                "(CLI: --force) to keep enumerating")
        k = len(cyc)
        against = sum(1 for i in range(k)
                      if (cyc[(i + 1) % k], cyc[i]) in dirs)
        g = min(against, k - against)
        if (q * (k - 2 * g)) % n != 0:
            return False
    return True


def brute_force_spanning_trees(graph: OrientedGraph) -> int:
    """Direction-blind count of edge subsets of size |V|-1 that connect all
    vertices; the oracle for the cofactor method."""
    n = len(graph.vertices)
    if n == 0:
        return 1
    pos = {v: i for i, v in enumerate(graph.vertices)}
    count = 0
    for combo in combinations(graph.edges, n - 1):
        dsu = list(range(n))

        def find(i: int) -> int:
            while dsu[i] != i:
                dsu[i] = dsu[dsu[i]]
                i = dsu[i]
            return i

        merges = 0
        for u, v in combo:
            ru, rv = find(pos[u]), find(pos[v])
            if ru != rv:
                dsu[ru] = rv
                merges += 1
        if merges == n - 1:
            count += 1
    return count


def spanning_trees_via_cofactor(graph: OrientedGraph, param: RootParam,
                                v: int, *, force: bool = False) -> SpanningTreeReport:
    """Cofactor det L_omega[V minus v]; trusted as the spanning-tree count
    exactly when mtt_condition holds, otherwise flagged untrusted."""
    if not graph.vertices:
        raise InputError("spanning-tree counting needs a nonempty graph")
    if not graph.has_vertex(v):
        raise UnknownVertex(f"unknown vertex {v}")
    holds = mtt_condition(graph, param, force=force)
    minor = laplacian_minor(graph, param,
                            [w for w in graph.vertices if w != v])
    if not minor.is_rational or minor.as_rational().denominator != 1:
        raise NonIntegerResult(
            f"cofactor {minor} is not an integer (condition_holds={holds})")
    count = minor.as_rational().numerator
    if count < 0:
        raise NonIntegerResult(f"cofactor {count} is negative")
    return SpanningTreeReport(count, holds, param, v)
