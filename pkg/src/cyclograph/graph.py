"""Oriented graphs, substructures and component classification.

An oriented graph has directed edges with no loops, no multiple arcs and no
digons.  A substructure pairs a vertex subset with an edge subset; edges may
keep endpoints outside the vertex subset, so a substructure need not be a
subgraph.  Graphs are immutable after construction and substructures are
lightweight views, so everything here is safe for parallel enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import GraphFormatError, InputError, NoCycle, UnknownEdge, UnknownVertex


class OrientedGraph:
    """Vertices in a fixed input order plus directed edges (tail, head).

    Edge ids are the dense positions 0..m-1 in the input edge order; matrix
    layouts follow these orders so identical inputs give identical output.
    """

    __slots__ = ("vertices", "edges", "_vpos", "_incident")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        verts = tuple(int(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex ids")
        pairs = tuple((int(u), int(v)) for u, v in edges)
        vset = set(verts)
        seen: set[tuple[int, int]] = set()
        incident: dict[int, list[int]] = {v: [] for v in verts}
        for eid, (u, v) in enumerate(pairs):
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise UnknownVertex(f"edge {u}->{v} uses an unknown vertex")
            if (u, v) in seen:
                raise InputError(f"multiple arc {u}->{v}")
            if (v, u) in seen:
                raise InputError(f"digon between {u} and {v}")
            seen.add((u, v))
            incident[u].append(eid)
            incident[v].append(eid)
        self.vertices = verts
        self.edges = pairs
        self._vpos = {v: i for i, v in enumerate(verts)}
        self._incident = {v: tuple(eids) for v, eids in incident.items()}

    # -- basic queries ---------------------------------------------------

    def has_vertex(self, v: int) -> bool:
        return v in self._vpos

    def vertex_position(self, v: int) -> int:
        try:
            return self._vpos[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v}") from None

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self.vertex_position(v)
        return self._incident[v]

    def degree(self, v: int) -> int:
        """Number of edges touching v in the underlying graph."""
        return len(self.incident_edges(v))

    def substructure(self, vset: Optional[Iterable[int]] = None,
                     eset: Optional[Iterable[int]] = None) -> "Substructure":
        return Substructure(self, vset, eset)

    def __eq__(self, other):
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"OrientedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    # -- text and JSON formats --------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "OrientedGraph":
        """One edge per line as "u v" (meaning u -> v); '#' starts a comment."""
        order: list[int] = []
        seen: set[int] = set()
        edges: list[tuple[int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(
                    f"expected 'tail head', got {line!r}", line=lineno)
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(
                    f"vertex ids must be integers, got {line!r}", line=lineno) from None
            for w in (u, v):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
            edges.append((u, v))
        try:
            return cls(order, edges)
        except InputError as exc:
            raise GraphFormatError(str(exc)) from exc

    def to_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)

    @classmethod
    def from_json(cls, obj) -> "OrientedGraph":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise GraphFormatError(f"invalid JSON: {exc}", line=exc.lineno) from exc
        if not isinstance(obj, dict) or "edges" not in obj:
            raise GraphFormatError("graph JSON must be an object with an 'edges' list")
        edges = []
        for i, pair in enumerate(obj["edges"]):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise GraphFormatError(f"edge #{i} must be a [tail, head] pair")
            edges.append((int(pair[0]), int(pair[1])))
        if obj.get("vertices") is not None:
            vertices = [int(v) for v in obj["vertices"]]
        else:
            vertices = []
            seen: set[int] = set()
            for u, v in edges:
                for w in (u, v):
                    if w not in seen:
                        seen.add(w)
                        vertices.append(w)
        try:
            return cls(vertices, edges)
        except GraphFormatError:
            raise
        except InputError as exc:
            raise GraphFormatError(str(exc)) from exc

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [[u, v] for u, v in self.edges]}


class Substructure:
    """A (vertex subset, edge subset) view of a parent graph.

    Edges in the subset may have one or both endpoints outside the vertex
    subset; that relaxation is the point of the construction.
    """

    __slots__ = ("parent", "vset", "eset")

    def __init__(self, parent: OrientedGraph, vset: Optional[Iterable[int]] = None,
                 eset: Optional[Iterable[int]] = None):
        self.parent = parent
        if vset is None:
            self.vset = frozenset(parent.vertices)
        else:
            vs = frozenset(int(v) for v in vset)
            for v in vs:
                if not parent.has_vertex(v):
                    raise UnknownVertex(f"unknown vertex {v}")
            self.vset = vs
        if eset is None:
            self.eset = frozenset(range(len(parent.edges)))
        else:
            es = frozenset(int(e) for e in eset)
            for e in es:
                if not 0 <= e < len(parent.edges):
                    raise UnknownEdge(f"unknown edge id {e}")
            self.eset = es

    @property
    def vlist(self) -> tuple[int, ...]:
        """Vertices of the subset in parent input order."""
        return tuple(v for v in self.parent.vertices if v in self.vset)

    @property
    def elist(self) -> tuple[int, ...]:
        return tuple(sorted(self.eset))

    def degree(self, v: int) -> int:
        """Number of subset edges incident to v (v need not be in vset)."""
        return sum(1 for e in self.parent.incident_edges(v) if e in self.eset)

    def __repr__(self):
        return f"Substructure(V'={sorted(self.vset)}, E'={sorted(self.eset)})"


@dataclass(frozen=True)
class Component:
    """One connected part of a substructure (or a degenerate edge)."""

    parent: OrientedGraph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    degenerate: bool = False


class ComponentKind(Enum):
    ROOTLESS_TREE = "rootless_tree"
    UNICYCLIC = "unicyclic"
    NORMAL_TREE = "normal_tree"
    IRREGULAR = "irregular"
    DEGENERATE_EDGE = "degenerate_edge"


@dataclass(frozen=True)
class ComponentClass:
    kind: ComponentKind
    k: Optional[int] = None
    g: Optional[int] = None


def components(sub: Substructure) -> list[Component]:
    """Partition a substructure by connectivity.

    Vertices are connected through subset edges with both endpoints in the
    vertex subset.  A subset edge with exactly one endpoint inside attaches to
    that endpoint's component; an edge with both endpoints outside becomes its
    own degenerate pseudo-component.
    """
    parent = sub.parent
    vlist = sub.vlist
    pos = {v: i for i, v in enumerate(vlist)}
    dsu = list(range(len(vlist)))

    def find(i: int) -> int:
        while dsu[i] != i:
            dsu[i] = dsu[dsu[i]]
            i = dsu[i]
        return i

    inside: list[tuple[int, int, int]] = []
    attached: list[tuple[int, int]] = []
    degenerate: list[int] = []
    for e in sorted(sub.eset):
        u, v = parent.edges[e]
        iu, iv = pos.get(u), pos.get(v)
        if iu is not None and iv is not None:
            inside.append((e, iu, iv))
            ru, rv = find(iu), find(iv)
            if ru != rv:
                dsu[max(ru, rv)] = min(ru, rv)
        elif iu is not None:
            attached.append((e, iu))
        elif iv is not None:
            attached.append((e, iv))
        else:
            degenerate.append(e)

    groups: dict[int, list[int]] = {}
    for i in range(len(vlist)):
        groups.setdefault(find(i), []).append(i)
    edges_of: dict[int, list[int]] = {r: [] for r in groups}
    for e, iu, iv in inside:
        edges_of[find(iu)].append(e)
    for e, i in attached:
        edges_of[find(i)].append(e)

    out = []
    for root in sorted(groups):
        vs = tuple(vlist[i] for i in groups[root])
        es = tuple(sorted(edges_of[root]))
        out.append(Component(parent, vs, es))
    for e in degenerate:
        out.append(Component(parent, (), (e,), degenerate=True))
    return out


def find_cycle(comp: Component) -> tuple[tuple[int, ...], int, int]:
    """Locate the unique cycle of a unicyclic component.

    Peels degree-1 vertices with their pendant edges, then walks the surviving
    cycle in one rotational direction counting edges oriented against the
    walk; the result is normalized to the minority count, so
    g = min(against, k - against) <= k // 2.
    """
    parent = comp.parent
    vs = set(comp.vertices)
    adj: dict[int, dict[int, int]] = {v: {} for v in comp.vertices}
    for e in comp.edge_ids:
        u, v = parent.edges[e]
        if u in vs and v in vs:
            adj[u][v] = e
            adj[v][u] = e
    alive = set(comp.vertices)
    pending = sorted(v for v in alive if len(adj[v]) == 1)
    while pending:
        v = pending.pop()
        if v not in alive or len(adj[v]) != 1:
            continue
        (w, _e), = adj[v].items()
        alive.discard(v)
        del adj[w][v]
        del adj[v]
        if w in alive and len(adj[w]) == 1:
            pending.append(w)
    if not alive:
        raise NoCycle("component has no cycle")
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
    edge_dirs = {(parent.edges[e][0], parent.edges[e][1]) for e in comp.edge_ids}
    against = 0
    for i in range(k):
        a, b = seq[i], seq[(i + 1) % k]
        if (b, a) in edge_dirs:
            against += 1
    g = min(against, k - against)
    return tuple(seq), k, g


def classify_component(comp: Component) -> ComponentClass:
    """Classify a connected component.

    Regular components (|V| = |E|) are rootless trees when an edge leaves the
    vertex set and unicyclic subgraphs otherwise; |V| = |E| + 1 is an ordinary
    tree; anything else is irregular.
    """
    if comp.degenerate:
        return ComponentClass(ComponentKind.DEGENERATE_EDGE)
    nv, ne = len(comp.vertices), len(comp.edge_ids)
    if nv == ne:
        vs = set(comp.vertices)
        leaving = any(
            comp.parent.edges[e][0] not in vs or comp.parent.edges[e][1] not in vs
            for e in comp.edge_ids)
        if leaving:
            return ComponentClass(ComponentKind.ROOTLESS_TREE)
        _, k, g = find_cycle(comp)
        return ComponentClass(ComponentKind.UNICYCLIC, k=k, g=g)
    if nv == ne + 1:
        return ComponentClass(ComponentKind.NORMAL_TREE)
    return ComponentClass(ComponentKind.IRREGULAR)


def is_all_regular(sub: Substructure) -> bool:
    """True when every component satisfies |V'| = |E'| and no subset edge has
    both endpoints outside the vertex subset."""
    for comp in components(sub):
        if comp.degenerate or len(comp.vertices) != len(comp.edge_ids):
            return False
    return True


def pendant_reduce(sub: Substructure) -> Substructure:
    """Strip pendant vertex/edge pairs until none remain.

    A pendant pair is a vertex with exactly one incident subset edge whose
    other endpoint is also in the vertex subset; removing the pair preserves
    the Laplacian determinant.  A vertex whose single edge dangles outside the
    subset stays (that is the minimal rootless tree).
    """
    parent = sub.parent
    vset = set(sub.vset)
    eset = set(sub.eset)
    changed = True
    while changed:
        changed = False
        for v in sorted(vset):
            incident = [e for e in parent.incident_edges(v) if e in eset]
            if len(incident) != 1:
                continue
            e = incident[0]
            u, w = parent.edges[e]
            other = w if u == v else u
            if other in vset:
                vset.discard(v)
                eset.discard(e)
                changed = True
                break
    return Substructure(parent, vset, eset)
