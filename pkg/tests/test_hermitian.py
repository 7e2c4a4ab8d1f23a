"""Matrix construction, exact determinants and their structural identities."""

import random
from fractions import Fraction

import pytest

from cyclograph import (
    CycloNum,
    OrientedGraph,
    RootParam,
    Substructure,
    build_incidence,
    build_laplacian,
    components,
    cycle_contribution,
    determinant,
    find_cycle,
    laplacian_minor,
    numeric_determinant,
    pendant_reduce,
    root_of_unity,
)
from cyclograph.errors import InputError, UnknownVertex
from conftest import random_oriented_graph, random_substructure

PARAMS = [RootParam(1, 0), RootParam(2, 1), RootParam(3, 1), RootParam(4, 1),
          RootParam(5, 1), RootParam(5, 2), RootParam(6, 1), RootParam(7, 2)]


def _param(rng):
    return PARAMS[rng.randrange(len(PARAMS))]


class TestBuildIncidence:
    def test_single_edge_column(self):
        g = OrientedGraph([1, 2], [(1, 2)])
        S = build_incidence(g.substructure(), RootParam(5, 1))
        omega = root_of_unity(RootParam(5, 1))
        assert S.entries[0][0] == -omega
        assert S.entries[1][0] == 1

    def test_empty_rows(self):
        g = OrientedGraph([1, 2], [(1, 2)])
        S = build_incidence(g.substructure([], [0]), RootParam(5, 1))
        assert S.rows == () and S.cols == (0,)
        assert S.entries == ()

    def test_outside_edge_gives_zero_column(self):
        g = OrientedGraph([1, 2, 3], [(2, 3)])
        S = build_incidence(g.substructure([1], [0]), RootParam(4, 1))
        assert S.entries[0][0] == 0


class TestBuildLaplacian:
    def test_two_rootless_tree(self):
        g = OrientedGraph([1, 2, 3], [(1, 2), (2, 3)])
        sub = g.substructure([1, 2], None)
        L = build_laplacian(sub, RootParam(5, 1))
        omega = root_of_unity(RootParam(5, 1))
        assert L.entries[0][0] == 1 and L.entries[1][1] == 2
        assert L.entries[0][1] == -omega
        assert L.entries[1][0] == -omega.conjugate()
        assert determinant(L) == 1

    def test_two_normal_tree(self):
        g = OrientedGraph([1, 2], [(1, 2)])
        L = build_laplacian(g.substructure(), RootParam(5, 1))
        assert L.entries[0][0] == 1 and L.entries[1][1] == 1
        assert determinant(L) == 0

    def test_empty_substructure(self):
        g = OrientedGraph([1], [])
        L = build_laplacian(g.substructure([], []), RootParam(5, 1))
        assert L.entries == ()
        assert determinant(L) == 1

    def test_hermitian_symmetry_random(self):
        rng = random.Random(5)
        for _ in range(60):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            L = build_laplacian(sub, _param(rng))
            size = len(L.index)
            for i in range(size):
                for j in range(size):
                    assert L.entries[i][j] == L.entries[j][i].conjugate()

    def test_gram_identity_random(self):
        # L equals S * S^H on random substructures of graphs up to 8 vertices
        rng = random.Random(6)
        for _ in range(200):
            graph = random_oriented_graph(rng, nmin=2, nmax=8)
            sub = random_substructure(rng, graph)
            param = _param(rng)
            L = build_laplacian(sub, param)
            S = build_incidence(sub, param)
            assert S.gram().entries == L.entries


class TestDeterminant:
    def test_identity(self):
        one = CycloNum.rational(1)
        zero = CycloNum.rational(0)
        eye = [[one, zero, zero], [zero, one, zero], [zero, zero, one]]
        assert determinant(eye) == 1

    def test_zero_column(self):
        zero = CycloNum.rational(0)
        two = CycloNum.rational(2)
        assert determinant([[two, zero], [two, zero]]) == 0

    def test_accepts_rationals(self):
        assert determinant([[2, 1], [1, 2]]) == 3
        assert determinant([[Fraction(1, 2)]]) == Fraction(1, 2)

    def test_rejects_non_square(self):
        with pytest.raises(InputError):
            determinant([[CycloNum.rational(1), CycloNum.rational(2)]])

    def test_bareiss_matches_expansion(self):
        # random 5x5 and 6x6 exercise the elimination path against the
        # permutation expansion of a 4x4 minor-by-minor Laplace expansion
        rng = random.Random(9)
        z = root_of_unity(RootParam(5, 1))
        for size in (5, 6):
            m = [[CycloNum.rational(rng.randint(-2, 2)) + rng.randint(-1, 1) * z
                  for _ in range(size)] for _ in range(size)]
            expected = _laplace(m)
            assert determinant(m) == expected

    def test_bareiss_with_zero_pivots(self):
        zero = CycloNum.rational(0)
        one = CycloNum.rational(1)
        m = [[zero, one, zero, zero, zero],
             [one, zero, zero, zero, zero],
             [zero, zero, zero, one, zero],
             [zero, zero, one, zero, zero],
             [zero, zero, zero, zero, one]]
        assert determinant(m) == 1


def _laplace(m):
    size = len(m)
    if size == 0:
        return CycloNum.rational(1)
    if size == 1:
        return m[0][0]
    acc = CycloNum.rational(0)
    for j in range(size):
        if m[0][j].is_zero:
            continue
        minor = [[row[t] for t in range(size) if t != j] for row in m[1:]]
        term = m[0][j] * _laplace(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


class TestLaplacianMinor:
    def test_full_classical_laplacian_is_singular(self, k4):
        assert laplacian_minor(k4, RootParam(1, 0), k4.vertices) == 0

    def test_empty_minor(self, triangle):
        assert laplacian_minor(triangle, RootParam(5, 1), []) == 1

    def test_triangle_at_minus_one(self, triangle):
        assert laplacian_minor(triangle, RootParam(2, 1), [1, 2, 3]) == 4

    def test_unknown_vertex(self, triangle):
        with pytest.raises(UnknownVertex):
            laplacian_minor(triangle, RootParam(2, 1), [1, 9])

    def test_uses_full_graph_degrees(self, figure_graph):
        # single-vertex minor is just the underlying degree
        assert laplacian_minor(figure_graph, RootParam(5, 1), [4]) == 3

    def test_matches_generic_determinant(self):
        rng = random.Random(13)
        for _ in range(40):
            graph = random_oriented_graph(rng)
            param = _param(rng)
            vset = [v for v in graph.vertices if rng.random() < 0.5]
            vlist = tuple(v for v in graph.vertices if v in set(vset))
            entries = []
            omega = root_of_unity(param)
            for u in vlist:
                row = []
                for w in vlist:
                    if u == w:
                        row.append(CycloNum.rational(graph.degree(u)))
                    elif (u, w) in set(graph.edges):
                        row.append(-omega)
                    elif (w, u) in set(graph.edges):
                        row.append(-omega.conjugate())
                    else:
                        row.append(CycloNum.rational(0))
                entries.append(row)
            assert laplacian_minor(graph, param, vset) == determinant(entries)


class TestStructuralIdentities:
    def test_pendant_invariance_random(self):
        rng = random.Random(17)
        for _ in range(100):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            param = _param(rng)
            reduced = pendant_reduce(sub)
            assert determinant(build_laplacian(sub, param)) == \
                determinant(build_laplacian(reduced, param))

    def test_block_factorization_random(self):
        rng = random.Random(19)
        for _ in range(100):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            param = _param(rng)
            whole = determinant(build_laplacian(sub, param))
            product = CycloNum.rational(1)
            for comp in components(sub):
                if comp.degenerate:
                    continue
                piece = Substructure(graph, comp.vertices, comp.edge_ids)
                product = product * determinant(build_laplacian(piece, param))
            assert whole == product

    def test_determinant_is_real(self):
        rng = random.Random(21)
        for _ in range(60):
            graph = random_oriented_graph(rng)
            sub = random_substructure(rng, graph)
            det = determinant(build_laplacian(sub, _param(rng)))
            assert det == det.conjugate()

    def test_cycle_formula_walk_weight(self):
        # det of a bare cycle equals 2 - w - conj(w) with w the walk weight
        rng = random.Random(25)
        for _ in range(60):
            k = rng.randint(3, 7)
            g = rng.randint(0, k // 2)
            verts = list(range(k))
            reversed_at = set(rng.sample(range(k), g))
            edges = []
            for i in range(k):
                a, b = verts[i], verts[(i + 1) % k]
                edges.append((b, a) if i in reversed_at else (a, b))
            graph = OrientedGraph(verts, edges)
            param = _param(rng)
            omega = root_of_unity(param)
            weight = CycloNum.rational(1)
            for i in range(k):
                a, b = verts[i], verts[(i + 1) % k]
                weight = weight * (omega if (a, b) in set(edges)
                                   else omega.conjugate())
            expected = 2 - weight - weight.conjugate()
            det = determinant(build_laplacian(graph.substructure(), param))
            assert det == expected
            _, kk, gg = find_cycle(components(graph.substructure())[0])
            assert det == cycle_contribution(param, kk, gg)


class TestNumericDeterminant:
    def test_scalar(self):
        assert numeric_determinant([[CycloNum.rational(2)]]) == pytest.approx(2.0)

    def test_rank_one_hermitian(self):
        i = root_of_unity(RootParam(4, 1))
        one = CycloNum.rational(1)
        m = [[one, -i], [i, one]]
        assert abs(numeric_determinant(m)) < 1e-12

    def test_agrees_with_exact_on_random(self):
        rng = random.Random(29)
        for _ in range(20):
            graph = random_oriented_graph(rng, nmin=6, nmax=6)
            param = _param(rng)
            L = build_laplacian(graph.substructure(), param)
            exact = determinant(L).to_complex()
            approx = numeric_determinant(L)
            assert abs(exact - approx) <= 1e-6 * max(1.0, abs(exact))


class TestMatrixJson:
    def test_laplacian_dump(self, triangle):
        L = build_laplacian(triangle.substructure(), RootParam(5, 1))
        dump = L.to_json()
        assert dump["index"] == [1, 2, 3]
        assert dump["entries"][0][0] == {"order": 1, "coeffs": ["2"]}
        assert len(dump["preview"]) == 3

    def test_incidence_dump(self, triangle):
        S = build_incidence(triangle.substructure(), RootParam(4, 1))
        dump = S.to_json()
        assert dump["rows"] == [1, 2, 3] and dump["cols"] == [0, 1, 2]
