import pytest

from tightcut.errors import GraphInputError
from tightcut.graph import (Graph, connected_components, contract, cut, delete_vertices, induced_subgraph,
                            is_connected, is_three_connected, neighborhood)


def test_from_edges_assigns_ids_in_order():
    g = Graph.from_edges([(1, 2), (2, 3), (1, 2)])
    assert g.edges == {0: (1, 2), 1: (2, 3), 2: (1, 2)}
    assert g.vertices == {1, 2, 3}
    assert g.neighbors(1) == (2,)
    assert [e for _, e in g.incident(1)] == [0, 2]


def test_rejects_loops_and_unknown_vertices():
    with pytest.raises(GraphInputError):
        Graph.from_edges([(1, 1)])
    with pytest.raises(GraphInputError):
        Graph.from_edges([(1, 5)], [1, 2])


def test_induced_and_delete(cat):
    g = cat["PRISM"]
    h = induced_subgraph(g, {1, 2, 3})
    assert sorted(h.edges.values()) == [(1, 2), (1, 3), (2, 3)]
    assert delete_vertices(g, {1, 2, 3}).vertices == {4, 5, 6}
    with pytest.raises(GraphInputError):
        induced_subgraph(g, {1, 99})


def test_contract_keeps_crossing_edges(cat):
    g = cat["PRISM"]
    h = contract(g, {1, 2, 3})
    assert len(h) == 4
    assert len(h.edges) == 6
    assert len(cut(h, {4, 5, 6})) == 3


def test_components_and_neighborhood(cat):
    g = cat["P4"]
    assert connected_components(g, {1, 2, 4}) == [frozenset({1, 2}), frozenset({4})]
    assert not is_connected(g, {1, 4})
    assert neighborhood(g, {2, 3}) == {1, 4}


def test_three_connectivity(cat):
    assert is_three_connected(cat["K4"])
    assert is_three_connected(cat["PETERSEN"])
    assert not is_three_connected(cat["C6"])
    assert not is_three_connected(cat["PAW"])


def test_graph_equality_and_hash():
    a = Graph.from_edges([(1, 2), (2, 3)])
    b = Graph.from_edges([(1, 2), (2, 3)])
    assert a == b and hash(a) == hash(b)
