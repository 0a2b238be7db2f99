from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaspec.graphs import (DisconnectedGraphError, Graph, GraphError, all_pairs_distances, generate_family,
                              generate_random_connected, is_connected, is_transmission_regular, prufer_to_edges)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError, match="out of range"):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(0)


def test_edges_are_normalized_and_deduplicated():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.m == 2


def test_families():
    assert generate_family("star", 4).edges == {(0, 1), (0, 2), (0, 3)}
    assert generate_family("complete", 3).m == 3
    assert generate_family("path", 1).m == 0
    assert generate_family("cycle", 5).m == 5
    kab = generate_family("complete_bipartite", 5, a=2)
    assert kab.m == 6 and (0, 1) not in kab.edges
    with pytest.raises(GraphError):
        generate_family("cycle", 2)
    with pytest.raises(GraphError):
        generate_family("complete_bipartite", 3, a=3)
    with pytest.raises(GraphError):
        generate_family("wheel", 5)


def test_is_star_ignores_labels():
    assert generate_family("star", 5).relabel([3, 0, 1, 2, 4]).is_star()
    assert generate_family("path", 3).is_star()
    assert not generate_family("path", 4).is_star()
    assert not generate_family("complete", 2).is_star()


def test_prufer_decoding():
    # sequence (3, 3, 3) on 5 vertices: star centred at 3 with leaf 4 joined last
    edges = prufer_to_edges([3, 3, 3], 5)
    assert sorted(tuple(sorted(e)) for e in edges) == [(0, 3), (1, 3), (2, 3), (3, 4)]


def test_random_connected_examples():
    assert generate_random_connected(1, 0, 7) == Graph(1)
    assert generate_random_connected(6, 10, 3).is_complete()
    g = generate_random_connected(8, 3, 42)
    assert g.m == 10
    # independent BFS over explicit adjacency lists
    adj = {v: set() for v in range(8)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    assert len(seen) == 8
    assert generate_random_connected(8, 3, 42) == g
    with pytest.raises(GraphError):
        generate_random_connected(4, 4, 0)


@given(st.integers(1, 25), st.integers(0, 10**6), st.data())
@settings(max_examples=150, deadline=None)
def test_random_connected_is_connected(n, seed, data):
    extra = data.draw(st.integers(0, n * (n - 1) // 2 - (n - 1)))
    g = generate_random_connected(n, extra, seed)
    assert is_connected(g)
    assert g.m == n - 1 + extra


def test_prufer_trees_cover_all_labeled_trees():
    # Cayley: 4^2 = 16 labeled trees on 4 vertices; the sampler should reach all
    seen = {generate_random_connected(4, 0, s).edges for s in range(600)}
    assert len(seen) == 16


def test_is_connected():
    assert is_connected(generate_family("path", 3))
    assert not is_connected(Graph(2))
    k5 = generate_family("complete", 5)
    assert is_connected(Graph(5, k5.edges - {(0, 1), (2, 3)}))


def test_p3_distances(p3):
    assert p3.dist.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    assert p3.tr == (3, 2, 3)
    assert p3.wiener == 4 and p3.s_sum == 6
    assert p3.avg_tr == Fraction(8, 3)
    assert (p3.min_tr, p3.max_tr) == (2, 3)


def test_k4_and_s4_distances(k4, s4):
    assert k4.wiener == 6
    assert set(k4.dist[~np.eye(4, dtype=bool)].tolist()) == {1}
    assert s4.tr == (3, 5, 5, 5)
    assert s4.wiener == 9
    assert s4.avg_tr == Fraction(9, 2)


def test_distances_are_read_only(p3):
    with pytest.raises(ValueError):
        p3.dist[0, 1] = 5


def test_disconnected_is_an_error():
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_transmission_regularity():
    assert is_transmission_regular(all_pairs_distances(generate_family("cycle", 5)))
    assert all_pairs_distances(generate_family("cycle", 5)).tr == (6,) * 5
    assert not is_transmission_regular(all_pairs_distances(generate_family("star", 4)))
    for n in range(2, 8):
        d = all_pairs_distances(generate_family("complete", n))
        assert is_transmission_regular(d) and d.tr[0] == n - 1


def test_distance_invariants_on_corpus(corpus_data):
    for g, d in corpus_data:
        D = d.dist.astype(np.int64)
        assert np.array_equal(D, D.T) and not D.diagonal().any()
        assert tuple(D.sum(axis=1)) == d.tr
        assert 2 * d.wiener == sum(d.tr)
        assert d.s_sum == int((np.triu(D, 1) ** 2).sum())
        assert d.min_tr <= d.avg_tr <= d.max_tr
        # triangle inequality over all triples
        assert (D[:, None, :] <= D[:, :, None] + D[None, :, :]).all()


def test_distances_match_networkx(corpus):
    nx = pytest.importorskip("networkx")
    for g in corpus[:60]:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        lengths = dict(nx.all_pairs_shortest_path_length(h))
        expected = [[lengths[i][j] for j in range(g.n)] for i in range(g.n)]
        assert all_pairs_distances(g).dist.tolist() == expected
