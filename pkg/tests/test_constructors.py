import pytest

from cdgraph.constructors import (
    Family,
    FamilyParams,
    ParameterError,
    cocktail_party,
    complete,
    direct_product_join,
    operation_d,
    supergraph,
    two_clique_cut_vertex,
)
from cdgraph.graph_core import block_decomposition, new_graph
from oracles import is_isomorphic_bruteforce

P3 = new_graph(3, [(0, 1), (1, 2)])
C4 = new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
BOWTIE = new_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_complete():
    assert complete(1).n == 1 and complete(1).edge_count == 0
    assert complete(3).degrees() == [2, 2, 2]
    k8 = complete(8)
    assert k8.edge_count == 28 and set(k8.degrees()) == {7}


class TestCocktailParty:
    def test_c4(self):
        g = cocktail_party(4)
        assert g == C4
        assert not g.has_edge(0, 2) and not g.has_edge(1, 3)

    @pytest.mark.parametrize("n", [6, 8])
    def test_regular(self, n):
        g = cocktail_party(n)
        assert set(g.degrees()) == {n - 2}

    def test_octahedron(self):
        # K_{2,2,2}
        oct_ = new_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2])
        assert is_isomorphic_bruteforce(cocktail_party(6), oct_)

    @pytest.mark.parametrize("n", range(4, 21, 2))
    def test_complement_is_perfect_matching(self, n):
        co = cocktail_party(n).complement()
        assert co.edge_count == n // 2
        assert set(co.degrees()) == {1}

    @pytest.mark.parametrize("n", [2, 3, 5, 7])
    def test_bad_n(self, n):
        with pytest.raises(ParameterError):
            cocktail_party(n)


class TestSupergraph:
    def test_c4_plus_diagonal(self):
        g = supergraph(4, 1)
        assert g.edge_count == 5 and g.has_edge(0, 2) and not g.has_edge(1, 3)

    def test_fill_gives_complete(self):
        assert supergraph(4, 2) == complete(4)

    def test_6_1_degrees(self):
        assert supergraph(6, 1).degree_sequence() == [5, 5, 4, 4, 4, 4]

    @pytest.mark.parametrize("n", range(4, 17, 2))
    def test_edge_counts_and_degrees(self, n):
        base = cocktail_party(n).edge_count
        for n1 in range(1, n // 2 + 1):
            g = supergraph(n, n1)
            assert g.edge_count == base + n1
            assert g.degrees().count(n - 1) == 2 * n1
            assert g.degrees().count(n - 2) == n - 2 * n1
        assert supergraph(n, n // 2) == complete(n)

    @pytest.mark.parametrize("n, n1", [(6, 0), (6, 4), (5, 1), (2, 1)])
    def test_bad_params(self, n, n1):
        with pytest.raises(ParameterError):
            supergraph(n, n1)


class TestTwoClique:
    def test_path(self):
        assert two_clique_cut_vertex(3, 1) == P3

    def test_bowtie(self):
        g = two_clique_cut_vertex(5, 2)
        # brute-force adjacency check of the definition
        small, cut, large = {0, 1}, 2, {3, 4}
        for u in range(5):
            for v in range(u + 1, 5):
                expected = cut in (u, v) or {u, v} <= small or {u, v} <= large
                assert g.has_edge(u, v) == expected
        assert g == BOWTIE

    def test_7_2_degrees(self):
        # K2 - v - K4: small-clique vertices have degree 2, large 4, cut 6
        assert two_clique_cut_vertex(7, 2).degree_sequence() == [6, 4, 4, 4, 4, 2, 2]

    @pytest.mark.parametrize("n", range(3, 15))
    def test_single_cut_vertex_complete_blocks(self, n):
        for n1 in range(1, (n - 1) // 2 + 1):
            g = two_clique_cut_vertex(n, n1)
            bd = block_decomposition(g)
            assert bd.cut_vertices == {n1}
            assert len(bd.blocks) == 2
            assert all(g.is_clique(b) for b in bd.blocks)

    @pytest.mark.parametrize("n, n1", [(2, 1), (4, 2), (5, 0), (5, 3)])
    def test_bad_params(self, n, n1):
        with pytest.raises(ParameterError):
            two_clique_cut_vertex(n, n1)


class TestJoin:
    def test_small(self):
        assert direct_product_join(complete(1), complete(1)) == complete(2)
        assert direct_product_join(complete(2), complete(2)) == complete(4)

    def test_c4_with_two_isolated_is_octahedron(self):
        g = direct_product_join(C4, new_graph(2))
        assert is_isomorphic_bruteforce(g, cocktail_party(6))
        assert not g.has_edge(4, 5)
        assert not g.has_edge(0, 2) and not g.has_edge(1, 3)
        assert set(g.degrees()) == {4}

    @pytest.mark.parametrize("a, b", [(P3, C4), (BOWTIE, new_graph(2)), (complete(3), P3)])
    def test_counts(self, a, b):
        g = direct_product_join(a, b)
        assert g.n == a.n + b.n
        assert g.edge_count == a.edge_count + b.edge_count + a.n * b.n


class TestOperationD:
    def test_k1(self):
        g = operation_d(complete(1))
        assert g.degree_sequence() == [2, 1, 1]
        assert g.degree(0) == 2

    def test_new_vertices_appended(self):
        g = operation_d(C4)
        assert g.adj[4] == g.adj[5] == frozenset(range(4))

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_iterates_cocktail_party(self, n):
        g = cocktail_party(n)
        for k in range(1, 4):
            g = operation_d(g)
            m = n + 2 * k
            assert set(g.degrees()) == {m - 2}
            co = g.complement()
            assert co.edge_count == m // 2 and set(co.degrees()) == {1}

    def test_small_case_is_isomorphic(self):
        assert is_isomorphic_bruteforce(operation_d(cocktail_party(4)), cocktail_party(6))

    def test_supergraph_6_1(self):
        assert operation_d(supergraph(6, 1)).degree_sequence() == [7, 7] + [6] * 6

    @pytest.mark.parametrize("n, n1", [(4, 1), (6, 2), (8, 3)])
    def test_complement_stays_matching_plus_isolated(self, n, n1):
        g = operation_d(supergraph(n, n1))
        assert max(g.complement().degrees()) <= 1


class TestFamilyParams:
    def test_accepts_string_family(self):
        p = FamilyParams("two-clique", 5, 2)
        assert p.family is Family.TWO_CLIQUE and p.build() == BOWTIE

    @pytest.mark.parametrize("args", [("cocktail", 5, 0), ("cocktail", 6, 1), ("supergraph", 6, 4), ("two-clique", 4, 2)])
    def test_invalid(self, args):
        with pytest.raises(ParameterError):
            FamilyParams(*args)
