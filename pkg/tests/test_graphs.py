import itertools
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from noncyclic.catalog import catalog_up_to, get_group
from noncyclic.graphs import (SimpleGraph, SubgraphWitness, build_noncyclic_graph, complete_bipartite, complete_graph,
                              complete_multipartite, cycle_graph, distance_matrix, export_dot, find_clique,
                              find_complete_bipartite, girth, graph_from_json, graph_to_json, induced_subgraph,
                              is_complete_multipartite, noncyclic_vertex_elements, path_graph)
from noncyclic.groups import cyclicizer, cyclic_subgroups

NONCYCLIC = [e.group for e in catalog_up_to(16) if not e.is_cyclic]
SMALL_GAMMA = [G for G in NONCYCLIC if build_noncyclic_graph(G).vertex_count <= 9]


def test_small_gamma_universe():
    assert [G.name for G in SMALL_GAMMA] == ["Z2^2", "S3", "Z2xZ4", "Z2^3", "D8", "Q8", "Z3^2", "D10", "Z2xZ6"]


class TestSimpleGraph:
    def test_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, [(0, 0)])
        with pytest.raises(IndexError):
            SimpleGraph(2, [(0, 2)])

    def test_edge_count_and_symmetry(self):
        g = SimpleGraph(4, [(0, 1), (1, 0), (2, 3)])
        assert g.edge_count == 2
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert sum(g.degree(v) for v in range(4)) == 2 * g.edge_count
        assert g.components() == [[0, 1], [2, 3]]
        assert not g.is_connected()


class TestBuilder:
    def test_z2_cubed_is_k7(self):
        g = build_noncyclic_graph(get_group("Z2^3"))
        assert (g.vertex_count, g.edge_count) == (7, 21)

    def test_z2xz6(self):
        g = build_noncyclic_graph(get_group("Z2xZ6"))
        assert (g.vertex_count, g.edge_count) == (9, 27)

    def test_z2xz4(self):
        g = build_noncyclic_graph(get_group("Z2xZ4"))
        assert (g.vertex_count, g.edge_count) == (7, 15)

    def test_cyclic_refused(self):
        with pytest.raises(ValueError):
            build_noncyclic_graph(get_group("Z6"))

    def test_labels_are_element_names(self):
        G = get_group("Q8")
        g = build_noncyclic_graph(G)
        assert g.labels == ("i", "-i", "j", "-j", "k", "-k")
        assert [G.element_names[x] for x in noncyclic_vertex_elements(G)] == list(g.labels)

    @pytest.mark.parametrize("G", NONCYCLIC, ids=lambda G: G.name)
    def test_invariants(self, G):
        g = build_noncyclic_graph(G)
        verts = noncyclic_vertex_elements(G)
        assert g.vertex_count == G.order - len(cyclicizer(G))
        assert all(g.degree(v) > 0 for v in range(g.vertex_count))
        for i, j in itertools.combinations(range(g.vertex_count), 2):
            assert g.has_edge(i, j) == (not oracles.pair_is_cyclic(G.table, verts[i], verts[j]))
        pos = {x: i for i, x in enumerate(verts)}
        for H in cyclic_subgroups(G):
            inside = [pos[h] for h in H if h in pos]
            assert not any(g.has_edge(a, b) for a, b in itertools.combinations(inside, 2))


class TestConstructors:
    def test_examples(self):
        assert complete_graph(3).edge_count == 3
        k2222 = complete_multipartite([2, 2, 2, 2])
        assert (k2222.vertex_count, k2222.edge_count) == (8, 24)
        assert complete_multipartite([4, 5]).edge_count == 20
        assert complete_multipartite([1] * 6).adj == complete_graph(6).adj

    def test_errors(self):
        with pytest.raises(ValueError):
            complete_multipartite([])
        with pytest.raises(ValueError):
            complete_multipartite([2, 0])
        with pytest.raises(ValueError):
            complete_graph(0)


class TestWitnessSearch:
    def test_clique_examples(self):
        w = find_clique(complete_graph(7), 7)
        assert w.vertex_parts == (tuple(range(7)),)
        G = get_group("D8")
        g = build_noncyclic_graph(G)
        w = find_clique(g, 5)
        assert w is not None and w.validate(g)
        # the five involutions form a clique too (the lexicographic first one uses r)
        inv = tuple(sorted(g.labels.index(n) for n in ("r^2", "s", "rs", "r^2s", "r^3s")))
        assert SubgraphWitness("clique", (inv,)).validate(g)
        assert find_clique(complete_bipartite(3, 3), 3) is None

    def test_bipartite_examples(self):
        for name in ("Z2xZ4", "Z2xZ6"):
            g = build_noncyclic_graph(get_group(name))
            w = find_complete_bipartite(g, 3, 3)
            assert w is not None and w.validate(g)
        assert find_complete_bipartite(path_graph(3), 2, 2) is None

    @pytest.mark.parametrize("G", SMALL_GAMMA, ids=lambda G: G.name)
    def test_bipartite_matches_all_subsets_oracle(self, G):
        g = build_noncyclic_graph(G)
        n = g.vertex_count
        for m in range(1, n):
            for k in range(1, n - m + 1):
                got = find_complete_bipartite(g, m, k)
                want = oracles.first_complete_bipartite(n, g.edges(), m, k)
                if want is None:
                    assert got is None, (m, k)
                else:
                    assert got is not None and got.vertex_parts == want, (m, k)
                    assert got.validate(g)

    @pytest.mark.parametrize("G", SMALL_GAMMA, ids=lambda G: G.name)
    def test_clique_matches_oracle(self, G):
        g = build_noncyclic_graph(G)
        for k in range(1, g.vertex_count + 1):
            want = next((c for c in itertools.combinations(range(g.vertex_count), k)
                         if all(g.has_edge(a, b) for a, b in itertools.combinations(c, 2))), None)
            got = find_clique(g, k)
            assert (got.vertex_parts[0] if got else None) == want

    def test_witness_validation_rejects_bad(self):
        g = complete_bipartite(2, 2)
        assert not SubgraphWitness("clique", ((0, 1),)).validate(g)
        assert not SubgraphWitness("complete_bipartite", ((0, 1), (1, 2))).validate(g)
        assert not SubgraphWitness("complete_bipartite", ((0,), (2,), (3,))).validate(g)
        assert not SubgraphWitness("unknown", ((0,), (2,))).validate(g)
        assert SubgraphWitness("complete_bipartite", ((0, 1), (2, 3))).validate(g)
        w = SubgraphWitness("complete_multipartite", ((0, 1), (2, 3)))
        assert SubgraphWitness.from_dict(json.loads(json.dumps(w.to_dict()))) == w


class TestRecognition:
    def test_z3_squared(self):
        parts = is_complete_multipartite(build_noncyclic_graph(get_group("Z3^2")))
        assert [len(p) for p in parts] == [2, 2, 2, 2]

    def test_k7_and_path(self):
        assert [len(p) for p in is_complete_multipartite(complete_graph(7))] == [1] * 7
        assert is_complete_multipartite(path_graph(3)) == [[1], [0, 2]]
        assert is_complete_multipartite(path_graph(4)) is None


class TestGirthAndMisc:
    def test_girth(self):
        assert girth(complete_graph(3)) == 3
        assert girth(complete_bipartite(3, 3)) == 4
        assert girth(build_noncyclic_graph(get_group("Z2xZ6"))) == 3
        assert girth(path_graph(5)) == math.inf
        assert girth(cycle_graph(7)) == 7

    def test_induced(self):
        sub = induced_subgraph(complete_graph(7), [1, 4, 6])
        assert sub.edge_count == 3 and sub.labels == ("1", "4", "6")
        g = build_noncyclic_graph(get_group("D8"))
        sub = induced_subgraph(g, [g.labels.index(n) for n in ("r", "r^2", "r^3")])
        assert (sub.vertex_count, sub.edge_count) == (3, 0)
        with pytest.raises(IndexError):
            induced_subgraph(g, [99])

    def test_dot(self):
        dot = export_dot(complete_graph(3), "K3")
        assert dot == 'graph "K3" {\n  0 [label="0"];\n  1 [label="1"];\n  2 [label="2"];\n' \
                      "  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"

    def test_distances(self):
        d = distance_matrix(path_graph(4))
        assert d[0] == [0, 1, 2, 3]
        assert distance_matrix(SimpleGraph(2))[0][1] == -1

    @pytest.mark.parametrize("G", NONCYCLIC, ids=lambda G: G.name)
    def test_json_round_trip(self, G):
        g = build_noncyclic_graph(G)
        text = graph_to_json(g)
        assert graph_from_json(text) == g
        assert graph_to_json(graph_from_json(text)) == text

    def test_json_errors(self):
        with pytest.raises(ValueError):
            graph_from_json('{"vertices": ["a"]}')
        with pytest.raises(ValueError):
            graph_from_json('{"vertices": ["a", "b"], "edges": [[0, 1], [1, 0]]}')


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [p for p, keep in zip(pairs, mask) if keep])


@settings(max_examples=150, deadline=None)
@given(graphs(), st.integers(1, 4), st.integers(1, 4))
def test_bipartite_search_agrees_with_oracle_on_random_graphs(g, m, n):
    got = find_complete_bipartite(g, m, n)
    want = oracles.first_complete_bipartite(g.vertex_count, g.edges(), m, n)
    assert (got.vertex_parts if got else None) == want


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_girth_matches_networkx(g):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges())
    want = nx.girth(h)
    assert girth(g) == want
