from hypothesis import given, settings, strategies as st

from tightcut.matching import (allowed_edges, brick_violation, find_perfect_matching, is_brick,
                               is_factor_critical, is_factorizable, is_perfect, perfect_matching_avoiding,
                               perfect_matching_containing)
from tightcut.graph import Graph, delete_vertices
from tightcut.testkit import allowed_edges_bruteforce, enumerate_perfect_matchings, random_factorizable_graph


def test_perfect_matching_on_catalog(cat):
    for name, g in cat.items():
        m = find_perfect_matching(g)
        if name == "P3":
            assert m is None
        else:
            assert is_perfect(g, m)


def test_warm_start_keeps_seed_when_possible(cat):
    g = cat["PRISM"]
    seed = {g.edge_between(1, 4)}
    m = find_perfect_matching(g, seed)
    assert is_perfect(g, m) and seed <= m


def test_factor_critical():
    tri = Graph.from_edges([(1, 2), (2, 3), (1, 3)])
    assert is_factor_critical(tri)
    assert not is_factor_critical(Graph.from_edges([(1, 2), (2, 3)]))
    assert is_factor_critical(Graph([7]))


def test_brick_values(cat):
    expected = {"K4": True, "K33": False, "PRISM": True, "C6": False, "W5": True, "PETERSEN": True}
    assert {k: is_brick(cat[k]) for k in expected} == expected


def test_brick_violation_names_a_pair(cat):
    a, b = brick_violation(cat["K33"])
    assert not enumerate_perfect_matchings(delete_vertices(cat["K33"], {a, b}))
    assert brick_violation(cat["K4"]) is None


def test_avoiding_and_containing(cat):
    g = cat["C6"]
    m = find_perfect_matching(g)
    assert perfect_matching_avoiding(g, m, {1, 2}) is not None
    assert perfect_matching_avoiding(g, m, {1, 3}) is None
    for e in g.edges:
        other = perfect_matching_containing(g, e, m)
        assert other is not None and e in other


def test_allowed_edges_paw(cat):
    g = cat["PAW"]
    assert {g.endpoints(e) for e in allowed_edges(g)} == {(1, 2), (3, 4)}


@settings(max_examples=60, deadline=None)
@given(n=st.sampled_from([2, 4, 6, 8]), p=st.floats(0, 1), seed=st.integers(0, 10**6))
def test_allowed_edges_match_enumeration(n, p, seed):
    g = random_factorizable_graph(n, p, seed)
    assert allowed_edges(g) == allowed_edges_bruteforce(g)


@settings(max_examples=60, deadline=None)
@given(n=st.sampled_from([4, 6, 8]), p=st.floats(0, 1), seed=st.integers(0, 10**6),
       k=st.integers(0, 7))
def test_avoiding_agrees_with_enumeration(n, p, seed, k):
    g = random_factorizable_graph(n, p, seed)
    vs = g.sorted_vertices()
    removed = {vs[k % n], vs[(k * 3 + 1) % n]}
    found = perfect_matching_avoiding(g, find_perfect_matching(g), removed)
    assert (found is not None) == bool(enumerate_perfect_matchings(delete_vertices(g, removed)))
