import pytest
from hypothesis import given, settings, strategies as st

from tightcut.altpaths import (Kind, balanced_path, classify, ear_split, find_ear, is_ear, iter_ears,
                               saturated_path, switch_circuit)
from tightcut.errors import PreconditionError
from tightcut.graph import Graph
from tightcut.matching import find_perfect_matching, is_perfect
from tightcut.testkit import random_factorizable_graph

from conftest import pairs_to_matching


@pytest.fixture
def c6(cat):
    g = cat["C6"]
    return g, pairs_to_matching(g, [(1, 2), (3, 4), (5, 6)])


def test_classify_kinds(c6):
    g, m = c6
    assert classify([1, 2, 3, 4], g, m).kind is Kind.SATURATED
    assert classify([2, 3], g, m).kind is Kind.EXPOSED
    c = classify([1, 2, 3], g, m)
    assert (c.kind, c.source, c.target) == (Kind.BALANCED, 1, 3)
    assert classify([5], g, m).kind is Kind.TRIVIAL
    assert classify([1, 2, 3, 4, 5, 6], g, m, closed=True).kind is Kind.ALTERNATING_CIRCUIT


def test_classify_rejects_non_walks(c6):
    g, m = c6
    with pytest.raises(PreconditionError):
        classify([1, 3], g, m)


def test_switch_c6(c6):
    g, m = c6
    out = switch_circuit(g, m, [1, 2, 3, 4, 5, 6])
    assert out == pairs_to_matching(g, [(2, 3), (4, 5), (6, 1)])
    assert switch_circuit(g, out, [1, 2, 3, 4, 5, 6]) == m


def test_saturated_paths_c6(c6):
    g, m = c6
    assert saturated_path(g, m, 1, 4).vertices == (1, 2, 3, 4)
    assert saturated_path(g, m, 1, 3) is None
    assert saturated_path(g, m, 3, 4).vertices == (3, 4)


def test_balanced_paths(c6, cat):
    g, m = c6
    assert balanced_path(g, m, 1, 3).vertices == (1, 2, 3)
    assert balanced_path(g, m, 2, 2).vertices == (2,)
    paw = cat["PAW"]
    pm = pairs_to_matching(paw, [(1, 2), (3, 4)])
    assert balanced_path(paw, pm, 4, 1, {1, 3, 4}).vertices == (4, 3, 1)


def test_ears_relative_to_a_set(c6):
    g, m = c6
    anchors = {1, 2}
    assert is_ear([2, 3, 4, 5, 6, 1], g, m, anchors)
    assert not is_ear([2, 3, 4], g, m, anchors)
    found = {e.vertices for e in iter_ears(g, m, anchors)}
    assert found == {(2, 3, 4, 5, 6, 1), (1, 6, 5, 4, 3, 2)}


def test_ear_split_keeps_a_lone_ear(c6):
    g, m = c6
    pieces = ear_split(g, m, [1, 2, 3, 4, 5, 6, 1][1:], {1, 2})
    assert [p.vertices for p in pieces] == [(2, 3, 4, 5, 6, 1)]


def test_ear_split_cuts_at_every_visit(c6):
    g, m = c6
    # edges 1-6 and 6-5 lie inside X and are dropped
    pieces = ear_split(g, m, [1, 6, 5, 4, 3, 2], {1, 2, 5, 6})
    assert [p.vertices for p in pieces] == [(5, 4, 3, 2)]


def test_ear_split_drops_paths_inside_x(c6):
    g, m = c6
    assert ear_split(g, m, [2, 3], {2, 3}) == []


def test_circuit_ear_on_paw(cat):
    g = cat["PAW"]
    m = pairs_to_matching(g, [(1, 2), (3, 4)])
    ear = find_ear(g, m, {1, 2})
    assert ear is not None and not ear.proper
    assert ear.ends == (1,) and set(ear.interior) == {3, 4}


@settings(max_examples=80, deadline=None)
@given(n=st.sampled_from([4, 6, 8, 10]), p=st.floats(0.1, 0.7), seed=st.integers(0, 10**6))
def test_switching_an_alternating_circuit_stays_perfect(n, p, seed):
    g = random_factorizable_graph(n, p, seed)
    m = find_perfect_matching(g)
    vs = g.sorted_vertices()
    for x in vs:
        for y in vs:
            if x == y or g.edge_between(x, y) is None or g.edge_between(x, y) in m:
                continue
            path = saturated_path(g, m, x, y)
            if path is None or len(path) < 4:
                continue
            out = switch_circuit(g, m, path.vertices)
            assert is_perfect(g, out) and out != m
            return


@settings(max_examples=60, deadline=None)
@given(n=st.sampled_from([4, 6, 8]), p=st.floats(0.1, 0.7), seed=st.integers(0, 10**6))
def test_ears_from_search_pass_the_classifier(n, p, seed):
    g = random_factorizable_graph(n, p, seed)
    m = find_perfect_matching(g)
    a, b = next(iter(g.endpoints(e) for e in sorted(m)))
    for ear in iter_ears(g, m, {a, b}, include_trivial=True):
        assert is_ear(ear.vertices, g, m, {a, b}, proper=ear.proper)
        assert not set(ear.interior) & {a, b}
