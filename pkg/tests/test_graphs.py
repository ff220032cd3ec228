import math
import random

import pytest
from hypothesis import given, strategies as st

from signedcayley.graphs import (Graph, GraphError, SmallGraphClass, are_isomorphic, classify_triple,
                                 complete_multipartite, complete_multipartite_parts, diameter,
                                 distance_matrix, from_dot, from_text, hypercube, induced_subgraph,
                                 is_isomorphism, mobius_ladder, parse_graph_spec, prism, random_graph,
                                 read_graph, regular_degree, standard_graph, to_dot, to_text,
                                 write_graph)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# examples ----------------------------------------------------------------------

def test_regular_degree_examples():
    assert regular_degree(standard_graph("cycle", 5)) == 2
    assert regular_degree(standard_graph("complete", 4)) == 3
    assert regular_degree(standard_graph("path", 3)) is None


def test_diameter_examples():
    assert diameter(standard_graph("complete", 6)) == 1
    assert diameter(standard_graph("cycle", 6)) == 3
    assert diameter(hypercube(3)) == 3


def test_disconnected_distance_is_infinite():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert distance_matrix(g)[0][3] == math.inf
    assert diameter(g) == math.inf


def test_induced_subgraph_examples():
    K4, C6 = standard_graph("complete", 4), standard_graph("cycle", 6)
    assert classify_triple(induced_subgraph(K4, {0, 2, 3})) is SmallGraphClass.K3
    assert classify_triple(induced_subgraph(C6, {0, 2, 4})) is SmallGraphClass.EMPTY3
    assert classify_triple(induced_subgraph(C6, {0, 1, 2})) is SmallGraphClass.P3


def test_classify_triple_examples():
    assert classify_triple(standard_graph("complete", 3)) is SmallGraphClass.K3
    assert classify_triple(Graph.from_edges(3, [(0, 1)])) is SmallGraphClass.OTHER
    assert classify_triple(standard_graph("empty", 3)) is SmallGraphClass.EMPTY3
    with pytest.raises(GraphError):
        classify_triple(standard_graph("path", 4))


def test_isomorphism_examples():
    C4 = standard_graph("cycle", 4)
    K4_minus_matching = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    phi = are_isomorphic(C4, K4_minus_matching)
    assert phi is not None and is_isomorphism(C4, K4_minus_matching, phi)
    K33 = complete_multipartite([3, 3])
    phi = are_isomorphic(mobius_ladder(6), K33)
    assert phi is not None and is_isomorphism(mobius_ladder(6), K33, phi)
    assert are_isomorphic(hypercube(3), mobius_ladder(8)) is None


def test_isomorphism_cap():
    with pytest.raises(GraphError):
        are_isomorphic(standard_graph("cycle", 17), standard_graph("cycle", 17))


def test_prism_and_mobius_not_isomorphic():
    assert are_isomorphic(prism(5), mobius_ladder(10)) is None
    assert are_isomorphic(prism(4), hypercube(3)) is not None


def test_multipartite_examples():
    assert complete_multipartite_parts(complete_multipartite([3, 3])) == [3, 3]
    assert complete_multipartite_parts(standard_graph("complete", 4)) == [1, 1, 1, 1]
    assert complete_multipartite_parts(standard_graph("cycle", 6)) is None


def test_standard_graph_examples():
    C5 = standard_graph("cycle", 5)
    assert regular_degree(C5) == 2 and C5.num_edges == 5
    assert standard_graph("complete", 4).num_edges == 6
    assert are_isomorphic(standard_graph("cycle", 3), standard_graph("complete", 3)) is not None
    with pytest.raises(GraphError):
        standard_graph("cycle", 2)
    with pytest.raises(GraphError):
        standard_graph("star", 4)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        Graph(1, (frozenset({0}),))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_parse_graph_spec():
    assert parse_graph_spec("cycle:7") == standard_graph("cycle", 7)
    assert parse_graph_spec("cube:3") == hypercube(3)
    assert parse_graph_spec("mobius:8") == mobius_ladder(8)
    for bad in ("cycle", "cycle:x", "blob:3"):
        with pytest.raises(GraphError):
            parse_graph_spec(bad)


def test_text_format_layout():
    assert to_text(standard_graph("path", 3)) == "3 2\n0 1\n1 2\n"
    with pytest.raises(GraphError):
        from_text("3 2\n0 1\n")


def test_dot_keeps_labels(tmp_path):
    g = Graph.from_edges(3, [(0, 1), (1, 2)], ['e', 'r "x"', "s\\t"])
    back = from_dot(to_dot(g))
    assert back == g and back.labels == g.labels
    path = tmp_path / "g.dot"
    write_graph(g, path)
    assert read_graph(path).labels == g.labels


# properties ----------------------------------------------------------------------

@given(graphs())
def test_adjacency_symmetric_irreflexive(g):
    for v in range(g.n):
        assert v not in g.adj[v]
        assert all(v in g.adj[u] for u in g.adj[v])
        assert g.degree(v) <= max(g.n - 1, 0)


@given(graphs())
def test_induced_on_all_vertices_is_identity(g):
    assert induced_subgraph(g, range(g.n)) == g


@given(graphs(), st.randoms(use_true_random=False))
def test_isomorphism_relabel_round_trip(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    phi = are_isomorphic(g, h)
    assert phi is not None and is_isomorphism(g, h, phi)
    psi = are_isomorphic(h, g)
    assert psi is not None and is_isomorphism(h, g, psi)
    assert are_isomorphic(g, g) is not None


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_symmetric(g, h):
    assert (are_isomorphic(g, h) is None) == (are_isomorphic(h, g) is None)


def test_isomorphism_agrees_with_brute_force_on_small_corpus():
    import itertools
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 6)
        g, h = random_graph(n, 0.5, rng), random_graph(n, 0.5, rng)
        brute = any(is_isomorphism(g, h, p) for p in itertools.permutations(range(n)))
        assert (are_isomorphic(g, h) is not None) == brute


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("b", range(1, 5))
@pytest.mark.parametrize("c", range(1, 5))
def test_multipartite_parts_recovered(a, b, c):
    assert complete_multipartite_parts(complete_multipartite([a, b, c])) == sorted([a, b, c])


@pytest.mark.parametrize("n", range(2, 16))
def test_diameter_closed_forms(n):
    assert diameter(standard_graph("complete", n)) == 1
    if n >= 3:
        assert diameter(standard_graph("cycle", n)) == n // 2


@given(graphs())
def test_text_and_dot_round_trip(g):
    assert from_text(to_text(g)) == g
    assert from_dot(to_dot(g)) == g


@given(graphs())
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.num_edges + g.complement().num_edges == g.n * (g.n - 1) // 2
