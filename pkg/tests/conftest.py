"""Shared fixtures: small named graphs and random generators.

The generators are deterministic given an rng so test failures reproduce.
"""

from __future__ import annotations

import random

import pytest

from cyclograph import OrientedGraph, Substructure


@pytest.fixture
def triangle() -> OrientedGraph:
    return OrientedGraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def k4() -> OrientedGraph:
    return OrientedGraph([1, 2, 3, 4],
                         [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def figure_graph() -> OrientedGraph:
    # 5 vertices: 1->2, 1->3, 2->4, 3->4, 4->5, 2->5
    return OrientedGraph([1, 2, 3, 4, 5],
                         [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (2, 5)])


def random_oriented_graph(rng: random.Random, nmin=4, nmax=7, mmax=10) -> OrientedGraph:
    n = rng.randint(nmin, nmax)
    verts = list(range(n))
    pairs = [(u, v) for u in verts for v in verts if u < v]
    rng.shuffle(pairs)
    m = rng.randint(min(3, len(pairs)), min(mmax, len(pairs)))
    edges = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in pairs[:m]]
    return OrientedGraph(verts, edges)


def random_substructure(rng: random.Random, graph: OrientedGraph) -> Substructure:
    vset = [v for v in graph.vertices if rng.random() < 0.6]
    eset = [e for e in range(len(graph.edges)) if rng.random() < 0.6]
    return Substructure(graph, vset, eset)


class ComponentBuilder:
    """Assemble a parent graph whose substructure is a chosen disjoint union
    of cycles (with optional pendants), rootless trees and anchors."""

    def __init__(self, rng: random.Random | None = None):
        self.rng = rng or random.Random(0)
        self.vertices: list[int] = []
        self.edges: list[tuple[int, int]] = []
        self.vset: list[int] = []
        self._next = 0

    def _new_vertex(self, inside=True) -> int:
        v = self._next
        self._next += 1
        self.vertices.append(v)
        if inside:
            self.vset.append(v)
        return v

    def _add_edge(self, u: int, v: int):
        self.edges.append((u, v))

    def add_cycle(self, k: int, g: int, pendants: int = 0):
        """A k-cycle with exactly g edges against the traversal direction,
        plus optional pendant vertices hung off cycle vertices."""
        vs = [self._new_vertex() for _ in range(k)]
        reversed_at = set(self.rng.sample(range(k), g))
        for i in range(k):
            a, b = vs[i], vs[(i + 1) % k]
            if i in reversed_at:
                self._add_edge(b, a)
            else:
                self._add_edge(a, b)
        for _ in range(pendants):
            w = self._new_vertex()
            anchor = self.rng.choice(vs)
            if self.rng.random() < 0.5:
                self._add_edge(w, anchor)
            else:
                self._add_edge(anchor, w)
        return vs

    def add_rootless_tree(self, size: int):
        """A path of `size` inside vertices whose last edge exits the subset."""
        vs = [self._new_vertex() for _ in range(size)]
        for a, b in zip(vs, vs[1:]):
            if self.rng.random() < 0.5:
                self._add_edge(a, b)
            else:
                self._add_edge(b, a)
        anchor = self._new_vertex(inside=False)
        if self.rng.random() < 0.5:
            self._add_edge(vs[-1], anchor)
        else:
            self._add_edge(anchor, vs[-1])
        return vs

    def build(self) -> Substructure:
        graph = OrientedGraph(self.vertices, self.edges)
        return Substructure(graph, self.vset, range(len(self.edges)))
