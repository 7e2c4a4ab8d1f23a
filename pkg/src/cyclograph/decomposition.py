"""Principal minor decomposition machinery.

Three independent routes to the same exact value:

* :func:`cauchy_binet_expand` is the brute-force oracle: it sums the
  substructure Laplacian determinant over every edge subset of the right
  size, exactly as the Cauchy-Binet expansion of det L[V'] does.
* :func:`structural_determinant` evaluates one substructure from its
  component classification: 0 unless all-regular, otherwise the product of
  the cycle contributions of its unicyclic components.
* :func:`census` tallies the all-regular edge subsets by class, so the
  census-weighted sum of class contributions is a third route to the minor.

Edge-subset enumeration is lexicographic over edge ids, so census output and
expansion order are reproducible.  Subsets are enumerated only up to a
desk-scale guardrail unless force=True.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .cyclotomic import CycloNum, RootParam, cycle_contribution
from .errors import GuardrailExceeded, UnknownVertex
from .graph import (
    ComponentKind,
    OrientedGraph,
    Substructure,
    classify_component,
    components,
)
from .hermitian import _det_cells

SUBSET_GUARDRAIL = 10_000_000


def _ordered_subset(graph: OrientedGraph, vset: Iterable[int]) -> tuple[int, ...]:
    wanted = set(int(v) for v in vset)
    for v in wanted:
        if not graph.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v}")
    return tuple(v for v in graph.vertices if v in wanted)


def _check_guardrail(m: int, s: int, force: bool):
    total = comb(m, s)
    if total > SUBSET_GUARDRAIL and not force:
        raise GuardrailExceeded(
            f"{total} edge subsets exceed the {SUBSET_GUARDRAIL} limit; "
            "pass force=True (CLI: --force) to run anyway")


def cauchy_binet_expand(graph: OrientedGraph, param: RootParam,
                        vset: Iterable[int], *, force: bool = False) -> CycloNum:
    """Sum of det L_omega(V', E') over all E' of size |V'|.

    This is the oracle side of the decomposition: it must equal
    laplacian_minor(graph, param, vset) exactly.  Returns 0 when |V'| > |E|
    (no subset of the required size exists).
    """
    vlist = _ordered_subset(graph, vset)
    s = len(vlist)
    m = len(graph.edges)
    if s > m:
        return CycloNum.rational(0)
    _check_guardrail(m, s, force)
    n, q = param.order, param.power
    pos = {v: i for i, v in enumerate(vlist)}
    einfo = [(pos.get(u), pos.get(v)) for u, v in graph.edges]
    fwd = (-1, q % n)
    bwd = (-1, (-q) % n)
    acc = [0] * n
    for combo in combinations(range(m), s):
        cells: list[list] = [[None] * s for _ in range(s)]
        deg = [0] * s
        for e in combo:
            iu, iv = einfo[e]
            if iu is not None:
                deg[iu] += 1
            if iv is not None:
                deg[iv] += 1
            if iu is not None and iv is not None:
                cells[iu][iv] = fwd
                cells[iv][iu] = bwd
        for i, d in enumerate(deg):
            if d:
                cells[i][i] = (d, 0)
        raw = _det_cells(cells, s, n)
        for i, c in enumerate(raw):
            if c:
                acc[i] += c
    return CycloNum.from_coeffs(n, acc)


def structural_determinant(sub: Substructure, param: RootParam) -> CycloNum:
    """Classification-based determinant of one substructure: 0 unless
    all-regular, else the product of its unicyclic cycle contributions
    (rootless-tree components contribute 1)."""
    result = CycloNum.rational(1)
    for comp in components(sub):
        cls = classify_component(comp)
        if cls.kind in (ComponentKind.NORMAL_TREE, ComponentKind.IRREGULAR,
                        ComponentKind.DEGENERATE_EDGE):
            return CycloNum.rational(0)
        if cls.kind is ComponentKind.UNICYCLIC:
            result = result * cycle_contribution(param, cls.k, cls.g)
    return result


# ---------------------------------------------------------------------------
# census of all-regular edge subsets


@dataclass(frozen=True)
class CensusEntry:
    """Multiplicity of one all-regular class among the enumerated subsets.

    cycles holds the (component order, cycle length, negative edges) triple of
    every unicyclic component, sorted; rootless-tree components are merged
    into a single total forest order.
    """

    cycles: tuple[tuple[int, int, int], ...]
    forest_order: int
    count: int

    @property
    def kind(self) -> str:
        if not self.cycles:
            return "rootless_forest"
        if len(self.cycles) == 1:
            return "unicyclic" if self.forest_order == 0 else "tu"
        return "mixed"

    def contribution(self, param: RootParam) -> CycloNum:
        value = CycloNum.rational(1)
        for _n, k, g in self.cycles:
            value = value * cycle_contribution(param, k, g)
        return value

    def to_json(self, param: Optional[RootParam] = None) -> dict:
        kind = self.kind
        if kind == "rootless_forest":
            n, k, g = self.forest_order, None, None
        elif kind in ("unicyclic", "tu"):
            n, k, g = self.cycles[0]
        else:
            n = self.forest_order + sum(c[0] for c in self.cycles)
            k = g = None
        obj: dict = {"class": kind, "n": n, "k": k, "g": g, "count": self.count}
        if kind == "mixed":
            obj["components"] = [list(c) for c in self.cycles]
            obj["forest_order"] = self.forest_order
        if param is not None:
            obj["contribution"] = self.contribution(param).to_json()
        return obj


def _subset_profile(graph: OrientedGraph, vlist: tuple[int, ...],
                    einfo: list, combo: tuple[int, ...]):
    """(sorted cycle triples, forest order) of one edge subset, or None when
    the subset is not all-regular or contains a fully-outside edge."""
    s = len(vlist)
    dsu = list(range(s))

    def find(i: int) -> int:
        while dsu[i] != i:
            dsu[i] = dsu[dsu[i]]
            i = dsu[i]
        return i

    inside: list[tuple[int, int, int]] = []
    attach_count = [0] * s
    for e in combo:
        iu, iv = einfo[e]
        if iu is None and iv is None:
            return None
        if iu is not None and iv is not None:
            inside.append((e, iu, iv))
            ru, rv = find(iu), find(iv)
            if ru != rv:
                dsu[max(ru, rv)] = min(ru, rv)
        else:
            attach_count[iu if iu is not None else iv] += 1

    nverts = Counter(find(i) for i in range(s))
    nedges: Counter = Counter()
    leaving: Counter = Counter()
    for e, iu, iv in inside:
        nedges[find(iu)] += 1
    for i, c in enumerate(attach_count):
        if c:
            r = find(i)
            nedges[r] += c
            leaving[r] += c

    cycles = []
    forest = 0
    for root, nv in nverts.items():
        ne = nedges.get(root, 0)
        if nv != ne:
            return None
        if leaving.get(root, 0):
            forest += nv
            continue
        k, g = _cycle_shape(graph, vlist, dsu, find, root, inside)
        cycles.append((nv, k, g))
    cycles.sort()
    return tuple(cycles), forest


def _cycle_shape(graph, vlist, dsu, find, root, inside):
    adj: dict[int, dict[int, int]] = {}
    for e, iu, iv in inside:
        if find(iu) == root:
            adj.setdefault(iu, {})[iv] = e
            adj.setdefault(iv, {})[iu] = e
    alive = set(adj)
    pending = [i for i in alive if len(adj[i]) == 1]
    while pending:
        i = pending.pop()
        if i not in alive or len(adj[i]) != 1:
            continue
        (j, _e), = adj[i].items()
        alive.discard(i)
        del adj[i]
        del adj[j][i]
        if j in alive and len(adj[j]) == 1:
            pending.append(j)
    start = min(alive)
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in adj[cur] if w != prev)
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    k = len(seq)
    dirs = {(vlist[iu], vlist[iv]) for _e, iu, iv in inside}
    against = sum(
        1 for i in range(k)
        if (vlist[seq[(i + 1) % k]], vlist[seq[i]]) in dirs)
    return k, min(against, k - against)


def census(graph: OrientedGraph, vset: Iterable[int], *,
           force: bool = False) -> list[CensusEntry]:
    """Classify every all-regular edge subset of size |vset| and tally the
    class multiplicities, in a deterministic order."""
    vlist = _ordered_subset(graph, vset)
    s = len(vlist)
    m = len(graph.edges)
    if s > m:
        return []
    _check_guardrail(m, s, force)
    pos = {v: i for i, v in enumerate(vlist)}
    einfo = [(pos.get(u), pos.get(v)) for u, v in graph.edges]
    tally: Counter = Counter()
    for combo in combinations(range(m), s):
        profile = _subset_profile(graph, vlist, einfo, combo)
        if profile is not None:
            tally[profile] += 1
    entries = [CensusEntry(cycles, forest, count)
               for (cycles, forest), count in tally.items()]
    entries.sort(key=lambda e: (len(e.cycles), e.cycles, e.forest_order))
    return entries


def census_sum(entries: Iterable[CensusEntry], param: RootParam) -> CycloNum:
    """Census-weighted sum of class contributions; the third route to the
    principal minor."""
    acc = CycloNum.rational(0)
    for entry in entries:
        acc = acc + entry.contribution(param) * entry.count
    return acc
