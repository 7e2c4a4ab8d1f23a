"""Graph model, connectivity partition and component classification."""

import random

import pytest

from cyclograph import (
    ComponentKind,
    OrientedGraph,
    Substructure,
    classify_component,
    components,
    find_cycle,
    is_all_regular,
    pendant_reduce,
)
from cyclograph.errors import (
    GraphFormatError,
    InputError,
    UnknownEdge,
    UnknownVertex,
)
from conftest import random_oriented_graph, random_substructure


class TestOrientedGraph:
    def test_rejects_loops(self):
        with pytest.raises(InputError):
            OrientedGraph([1], [(1, 1)])

    def test_rejects_multi_arcs(self):
        with pytest.raises(InputError):
            OrientedGraph([1, 2], [(1, 2), (1, 2)])

    def test_rejects_digons(self):
        with pytest.raises(InputError):
            OrientedGraph([1, 2], [(1, 2), (2, 1)])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(UnknownVertex):
            OrientedGraph([1, 2], [(1, 3)])

    def test_degree_is_underlying(self, figure_graph):
        assert figure_graph.degree(4) == 3
        assert figure_graph.degree(1) == 2

    def test_text_round_trip(self, figure_graph):
        again = OrientedGraph.from_text(figure_graph.to_text())
        assert again == figure_graph

    def test_text_comments_and_errors(self):
        g = OrientedGraph.from_text("# a comment\n1 2\n\n2 3 # trailing\n")
        assert g.edges == ((1, 2), (2, 3))
        with pytest.raises(GraphFormatError) as err:
            OrientedGraph.from_text("1 2\n1 2 3\n")
        assert err.value.line == 2
        with pytest.raises(GraphFormatError) as err:
            OrientedGraph.from_text("1 x\n")
        assert err.value.line == 1

    def test_json_round_trip(self, figure_graph):
        assert OrientedGraph.from_json(figure_graph.to_json()) == figure_graph

    def test_json_infers_vertices(self):
        g = OrientedGraph.from_json({"edges": [[3, 1], [1, 2]]})
        assert g.vertices == (3, 1, 2)

    def test_json_rejects_bad_shapes(self):
        with pytest.raises(GraphFormatError):
            OrientedGraph.from_json({"edges": [[1, 2, 3]]})
        with pytest.raises(GraphFormatError):
            OrientedGraph.from_json("not json at all {")


class TestSubstructure:
    def test_validates_members(self, triangle):
        with pytest.raises(UnknownVertex):
            Substructure(triangle, [9], [])
        with pytest.raises(UnknownEdge):
            Substructure(triangle, [1], [7])

    def test_defaults_to_everything(self, triangle):
        sub = triangle.substructure()
        assert sub.vset == frozenset({1, 2, 3})
        assert sub.eset == frozenset({0, 1, 2})


class TestComponents:
    def test_figure_edge_outside_vertex_set(self, figure_graph):
        # V'={2,4}, E'={2->4, 4->5}: one component carrying both edges
        sub = figure_graph.substructure([2, 4], [2, 4])
        comps = components(sub)
        assert len(comps) == 1
        assert comps[0].vertices == (2, 4)
        assert comps[0].edge_ids == (2, 4)

    def test_empty_vertex_set(self, figure_graph):
        assert components(figure_graph.substructure([], [])) == []

    def test_degenerate_edge_pseudo_component(self, figure_graph):
        # V'={1,3} with the edge 4->5 fully outside
        sub = figure_graph.substructure([1, 3], [4])
        comps = components(sub)
        assert len(comps) == 3
        assert [c.vertices for c in comps] == [(1,), (3,), ()]
        assert comps[2].degenerate and comps[2].edge_ids == (4,)

    def test_partition_properties(self):
        rng = random.Random(7)
        for _ in range(80):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            comps = components(sub)
            seen_vertices = [v for c in comps for v in c.vertices]
            assert sorted(seen_vertices) == sorted(sub.vset)
            seen_edges = sorted(e for c in comps for e in c.edge_ids)
            assert seen_edges == sorted(sub.eset)


class TestClassification:
    def test_single_vertex_with_leaving_edge(self, figure_graph):
        sub = figure_graph.substructure([4], [4])  # edge 4->5 leaves
        cls = classify_component(components(sub)[0])
        assert cls.kind is ComponentKind.ROOTLESS_TREE

    def test_directed_triangle(self, triangle):
        cls = classify_component(components(triangle.substructure())[0])
        assert cls.kind is ComponentKind.UNICYCLIC
        assert (cls.k, cls.g) == (3, 0)

    def test_path_is_normal_tree(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3)])
        cls = classify_component(components(g.substructure())[0])
        assert cls.kind is ComponentKind.NORMAL_TREE

    def test_irregular(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])
        sub = g.substructure([1], [0, 1, 2])
        kinds = {classify_component(c).kind for c in components(sub)}
        assert ComponentKind.IRREGULAR in kinds

    def test_regular_components_dichotomy(self):
        rng = random.Random(11)
        for _ in range(120):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            for comp in components(sub):
                cls = classify_component(comp)
                if comp.degenerate:
                    assert cls.kind is ComponentKind.DEGENERATE_EDGE
                elif len(comp.vertices) == len(comp.edge_ids):
                    assert cls.kind in (ComponentKind.ROOTLESS_TREE,
                                        ComponentKind.UNICYCLIC)
                else:
                    assert cls.kind in (ComponentKind.NORMAL_TREE,
                                        ComponentKind.IRREGULAR)


class TestFindCycle:
    def test_aligned_triangle(self, triangle):
        seq, k, g = find_cycle(components(triangle.substructure())[0])
        assert (k, g) == (3, 0)
        assert set(seq) == {1, 2, 3}

    def test_reversed_edge_triangle(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
        _, k, g_count = find_cycle(components(g.substructure())[0])
        assert (k, g_count) == (3, 1)

    def test_four_cycle_minority_normalization(self):
        # one edge against any rotational traversal: g = min(1, 3) = 1
        g = OrientedGraph([1, 2, 3, 4], [(1, 2), (2, 3), (4, 3), (4, 1)])
        _, k, g_count = find_cycle(components(g.substructure())[0])
        assert (k, g_count) == (4, 1)

    def test_half_negatived_four_cycle(self):
        g = OrientedGraph([1, 2, 3, 4], [(1, 2), (3, 2), (3, 4), (1, 4)])
        _, k, g_count = find_cycle(components(g.substructure())[0])
        assert (k, g_count) == (4, 2)

    def test_peels_pendants_first(self):
        g = OrientedGraph([1, 2, 3, 4, 5],
                          [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])
        seq, k, g_count = find_cycle(components(g.substructure())[0])
        assert (k, g_count) == (3, 0)
        assert set(seq) == {1, 2, 3}

    def test_bounds_invariant(self):
        rng = random.Random(23)
        for _ in range(150):
            graph = random_oriented_graph(rng)
            sub = graph.substructure()
            for comp in components(sub):
                cls = classify_component(comp)
                if cls.kind is ComponentKind.UNICYCLIC:
                    seq, k, g = find_cycle(comp)
                    assert 0 <= g <= k // 2
                    assert k == len(seq) >= 3


class TestAllRegular:
    def test_rootless_forest(self, figure_graph):
        sub = figure_graph.substructure([1, 2], [0, 2])  # 1->2 inside, 2->4 out
        assert is_all_regular(sub)

    def test_normal_tree_component_fails(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3)])
        assert not is_all_regular(g.substructure())

    def test_degenerate_edge_fails(self, figure_graph):
        assert not is_all_regular(figure_graph.substructure([1, 3], [4]))


class TestPendantReduce:
    def test_unicyclic_to_bare_cycle(self):
        g = OrientedGraph([1, 2, 3, 4, 5],
                          [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])
        red = pendant_reduce(g.substructure())
        assert red.vset == frozenset({1, 2, 3})
        assert red.eset == frozenset({0, 1, 2})

    def test_bare_cycle_fixpoint(self, triangle):
        red = pendant_reduce(triangle.substructure())
        assert red.vset == frozenset({1, 2, 3})
        assert red.eset == frozenset({0, 1, 2})

    def test_rootless_tree_terminal_shape(self):
        g = OrientedGraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
        sub = g.substructure([1, 2, 3], None)
        red = pendant_reduce(sub)
        assert len(red.vset) == 1 and len(red.eset) == 1

    def test_normal_tree_reduces_to_lone_vertex(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3)])
        red = pendant_reduce(g.substructure())
        assert len(red.vset) == 1 and len(red.eset) == 0
