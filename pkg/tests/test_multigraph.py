import pytest
from hypothesis import given

from graphs import C4, DOUBLE, K2, P3, W4, multigraphs
from oddsplit.errors import LoopEdge, OverlappingSets, VertexOutOfRange
from oddsplit.multigraph import (
    Multigraph,
    classify_components,
    components,
    degree,
    edges_between,
    even_vertices,
    from_edge_list,
    induced_subgraph,
    odd_vertices,
)


def test_from_edge_list():
    assert K2.n == 2 and K2.edges == ((0, 1),)
    assert P3.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("pairs, exc", [
    ([(0, 0)], LoopEdge),
    ([(0, 2)], VertexOutOfRange),
    ([(-1, 0)], VertexOutOfRange),
])
def test_from_edge_list_rejects(pairs, exc):
    with pytest.raises(exc):
        from_edge_list(2, pairs)


@pytest.mark.parametrize("G, v, d", [(K2, 0, 1), (DOUBLE, 0, 2), (P3, 1, 2)])
def test_degree(G, v, d):
    assert degree(G, v) == d


def test_degree_out_of_range():
    with pytest.raises(VertexOutOfRange):
        degree(K2, 2)


@pytest.mark.parametrize("G, odd", [(P3, {0, 2}), (C4, set()), (W4, {0, 1, 2, 3})])
def test_odd_vertices(G, odd):
    assert odd_vertices(G) == odd
    assert even_vertices(G) == set(range(G.n)) - odd


def test_induced_subgraph():
    H, vmap, emap = induced_subgraph(P3, {0, 2})
    assert H.n == 2 and H.m == 0 and vmap == [0, 2] and emap == []
    rim, vmap, emap = induced_subgraph(W4, {0, 1, 2, 3})
    assert rim.m == 4 and emap == [0, 1, 2, 3]
    assert all(d == 2 for d in rim.degrees)
    same, vmap, emap = induced_subgraph(W4, range(5))
    assert same == W4 and emap == list(range(8))


@pytest.mark.parametrize("G, comps", [
    (P3, [{0, 1, 2}]),
    (Multigraph(2), [{0}, {1}]),
    (from_edge_list(4, [(2, 3), (0, 1)]), [{0, 1}, {2, 3}]),
])
def test_components(G, comps):
    assert components(G) == comps


def test_edges_between():
    assert edges_between(W4, {0, 1, 2, 3}, {4}) == 4
    assert edges_between(P3, {0}, {2}) == 0
    assert edges_between(DOUBLE, {0}, {1}) == 2
    with pytest.raises(OverlappingSets):
        edges_between(P3, {0, 1}, {1})


@pytest.mark.parametrize("G, X, Y, Z", [
    (P3, [{0}, {2}], [{1}], []),
    (W4, [{0, 1, 2, 3}], [{4}], []),
    (C4, [], [], [{0, 1, 2, 3}]),
])
def test_classify_components(G, X, Y, Z):
    cc = classify_components(G)
    assert list(cc.X) == X and list(cc.Y) == Y and list(cc.Z) == Z


@given(multigraphs())
def test_handshake(G):
    assert sum(G.degrees) == 2 * G.m


@given(multigraphs())
def test_odd_vertices_even_per_component(G):
    odd = odd_vertices(G)
    for c in components(G):
        assert len(c & odd) % 2 == 0


@given(multigraphs())
def test_classification_partitions_vertices(G):
    cc = classify_components(G)
    everything = list(cc.X) + list(cc.Y) + list(cc.Z)
    assert sum(map(len, everything)) == G.n
    assert frozenset().union(*everything) == set(range(G.n))
    assert all(G.degrees[v] % 2 for X in cc.X for v in X)
    assert all(G.degrees[v] % 2 == 0 for W in cc.Y + cc.Z for v in W)
    assert all(len(Y) % 2 for Y in cc.Y) and all(len(Z) % 2 == 0 for Z in cc.Z)


@given(multigraphs())
def test_induced_edge_map_preserves_endpoints(G):
    U = {v for v in range(G.n) if v % 2 == 0}
    H, vmap, emap = induced_subgraph(G, U)
    assert len(set(emap)) == len(emap)
    for j, e in enumerate(emap):
        a, b = H.edges[j]
        assert (vmap[a], vmap[b]) == G.edges[e]
