import random

import pytest

from tightcut.altpaths import Kind, classify
from tightcut.canonical import decompose
from tightcut.engine import compute_S0, fat_witness
from tightcut.errors import NotABrickError, PreconditionError
from tightcut.graph import Graph
from tightcut.matching import crossing_edges, is_brick, is_perfect
from tightcut.testkit import canonical_shores, enumerate_perfect_matchings

from conftest import pairs_to_matching

# One small brick per branch of the case analysis, found by a random search
# and frozen. Each entry: edges, shore, starting matching, ear policy, trace.
BRANCHES = {
    "zero-crossing": (
        [(1, 2), (1, 4), (1, 5), (1, 7), (1, 6), (1, 3), (2, 4), (2, 7), (2, 6), (2, 5), (3, 7), (3, 5),
         (3, 6), (4, 8), (5, 6), (5, 8), (6, 8)],
        [1, 4], [(1, 4), (2, 6), (3, 7), (5, 8)], True),
    "non-separating": (
        [(1, 2), (1, 4), (1, 5), (1, 7), (1, 6), (1, 3), (2, 4), (2, 7), (2, 6), (2, 5), (3, 7), (3, 5),
         (3, 6), (4, 8), (5, 6), (5, 8), (6, 8)],
        [1, 2, 4], [(1, 4), (2, 6), (3, 7), (5, 8)], True),
    "contained/cut-vertex": (
        [(1, 3), (1, 7), (1, 5), (1, 4), (2, 6), (2, 4), (2, 7), (2, 5), (3, 7), (3, 8), (4, 7), (5, 8),
         (5, 6), (6, 8), (7, 8)],
        [1, 2, 4], [(1, 4), (2, 7), (3, 8), (5, 6)], True),
    "contained/multiNei": (
        [(1, 3), (1, 7), (1, 5), (1, 4), (2, 6), (2, 4), (2, 7), (2, 5), (3, 7), (3, 8), (4, 7), (5, 8),
         (5, 6), (6, 8), (7, 8)],
        [1, 2, 3, 4, 8], [(1, 4), (2, 7), (3, 8), (5, 6)], True),
    "contained/proper-ear": (
        [(1, 7), (1, 5), (1, 8), (2, 8), (2, 7), (2, 4), (3, 5), (3, 6), (3, 7), (4, 6), (4, 8), (4, 7),
         (4, 5), (5, 8), (5, 6), (6, 8), (7, 8)],
        [1, 2, 4, 7, 8], [(1, 7), (2, 8), (3, 6), (4, 5)], True),
    "contained/multi2ear": (
        [(1, 8), (1, 9), (1, 6), (2, 4), (2, 9), (2, 8), (3, 9), (3, 5), (3, 12), (4, 10), (4, 8), (4, 9),
         (5, 8), (5, 12), (5, 7), (6, 8), (6, 11), (7, 12), (7, 10), (7, 11), (7, 8), (8, 12), (10, 11)],
        [1, 3, 5, 6, 7, 9, 12], [(1, 9), (2, 4), (3, 5), (6, 8), (7, 12), (10, 11)], False),
    "mixed/halfopen": (
        [(1, 6), (1, 5), (1, 3), (2, 4), (2, 6), (2, 7), (2, 8), (2, 5), (3, 6), (3, 5), (3, 8), (4, 5),
         (4, 7), (6, 8), (7, 8)],
        [1, 2, 3, 5, 6], [(1, 5), (2, 8), (3, 6), (4, 7)], True),
    "mixed/surrounded": (
        [(1, 6), (1, 3), (1, 2), (2, 7), (2, 6), (2, 4), (3, 7), (3, 6), (3, 5), (3, 8), (4, 5), (4, 6),
         (5, 7), (5, 6), (6, 7), (6, 8), (7, 8)],
        [1, 2, 3, 7, 8], [(1, 2), (3, 6), (4, 5), (7, 8)], True),
}


def assert_fat(g, shore, w):
    assert is_perfect(g, w.output_matching)
    assert len(crossing_edges(g, w.output_matching, shore)) == w.crossing >= 2
    assert w.output_matching in set(enumerate_perfect_matchings(g))
    if w.circuit is not None:
        assert classify(w.circuit, g, w.input_matching, closed=True).kind is Kind.ALTERNATING_CIRCUIT


@pytest.mark.parametrize("label", sorted(BRANCHES))
def test_each_branch_is_reached_and_fat(label):
    edges, shore, pairs, prefer = BRANCHES[label]
    g = Graph.from_edges(edges)
    assert is_brick(g)
    m = pairs_to_matching(g, pairs)
    w = fat_witness(g, shore, m, prefer_proper_ears=prefer)
    assert w.trace[-1] == label
    assert_fat(g, frozenset(shore), w)


def test_prism_example(cat):
    g = cat["PRISM"]
    m = pairs_to_matching(g, [(1, 2), (3, 6), (4, 5)])
    w = fat_witness(g, {1, 2, 3}, m)
    assert_fat(g, frozenset({1, 2, 3}), w)
    rungs = {g.edge_between(1, 4), g.edge_between(2, 5), g.edge_between(3, 6)}
    assert len(w.output_matching & rungs) >= 2


def test_k4_examples(cat):
    g = cat["K4"]
    fat = pairs_to_matching(g, [(1, 3), (2, 4)])
    w = fat_witness(g, {1, 2}, fat)
    assert w.output_matching == fat and w.trace == ("already-fat",)
    w = fat_witness(g, {1, 2}, pairs_to_matching(g, [(1, 2), (3, 4)]))
    assert w.trace == ("zero-crossing",) and w.crossing == 2


def test_preconditions(cat):
    with pytest.raises(NotABrickError):
        fat_witness(cat["K33"], {1, 2, 4})
    with pytest.raises(PreconditionError):
        fat_witness(cat["K4"], {1})
    with pytest.raises(PreconditionError):
        fat_witness(cat["PRISM"], {1, 2, 3, 4, 5})
    with pytest.raises(PreconditionError):
        fat_witness(cat["K4"], {1, 9})


def test_compute_S0(cat):
    paw, p4 = cat["PAW"], cat["P4"]
    d = decompose(paw)
    assert compute_S0(paw, d, {1, 2}) == {1, 2}
    assert compute_S0(paw, d, {1, 2, 3, 4}) == {1, 2, 3, 4}
    with pytest.raises(PreconditionError):
        compute_S0(p4, decompose(p4), {1, 2})


def _random_bricks(count, n, seed):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.4]
        g = Graph.from_edges(pairs, range(1, n + 1))
        if is_brick(g):
            found.append(g)
    return found


@pytest.mark.parametrize("prefer", [True, False])
def test_random_bricks_differential(prefer):
    seen = set()
    for g in _random_bricks(12, 8, seed=7):
        pms = enumerate_perfect_matchings(g)
        for shore in canonical_shores(g, 2, len(g) - 2):
            for m in pms[:4]:
                w = fat_witness(g, shore, m, prefer_proper_ears=prefer)
                assert_fat(g, shore, w)
                seen.add(w.trace[-1])
    assert {"already-fat", "zero-crossing", "non-separating"} <= seen
    contained = {"contained/cut-vertex", "contained/proper-ear", "contained/multiNei", "contained/multi2ear"}
    assert seen & (contained | {"mixed/halfopen", "mixed/surrounded"})
