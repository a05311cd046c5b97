import pytest
from hypothesis import given, settings, strategies as st

from tightcut.canonical import (build_poset, decompose, factor_components, kl_partition, leq,
                                tag_upper_components, tpath_construct, up_sets)
from tightcut.errors import NotFactorizableError, PreconditionError
from tightcut.testkit import kl_classes_bruteforce, leq_bruteforce, random_factorizable_graph

from conftest import pairs_to_matching

fs = frozenset


def comp_sets(g):
    return [c.vertices for c in factor_components(g)]


def test_factor_components(cat):
    assert comp_sets(cat["P4"]) == [fs({1, 2}), fs({3, 4})]
    assert comp_sets(cat["K4"]) == [fs({1, 2, 3, 4})]
    assert comp_sets(cat["PAW"]) == [fs({1, 2}), fs({3, 4})]


def test_not_factorizable(cat):
    with pytest.raises(NotFactorizableError):
        decompose(cat["P3"])


def test_leq_values(cat):
    paw, p4 = cat["PAW"], cat["P4"]
    assert leq(paw, None, 0, 1)
    assert not leq(paw, None, 1, 0)
    assert not leq(p4, None, 0, 1) and not leq(p4, None, 1, 0)
    assert leq(p4, None, 0, 0)


def test_build_poset(cat):
    assert build_poset(cat["P4"]) == ((True, False), (False, True))
    assert build_poset(cat["PAW"]) == ((True, True), (False, True))
    assert build_poset(cat["K4"]) == ((True,),)


def test_kl_partition(cat):
    assert sorted(map(sorted, kl_partition(cat["C6"], 0))) == [[1, 3, 5], [2, 4, 6]]
    assert sorted(map(sorted, kl_partition(cat["K4"], 0))) == [[1], [2], [3], [4]]
    assert sorted(map(sorted, kl_partition(cat["PAW"], 0))) == [[1], [2]]


def test_tags(cat):
    assert tag_upper_components(cat["PAW"], None, 0) == {fs({3, 4}): fs({1})}
    assert tag_upper_components(cat["P4"], None, 0) == {}
    assert tag_upper_components(cat["K4"], None, 0) == {}


def test_up_sets(cat):
    d = decompose(cat["PAW"])
    assert up_sets(d, 0, {1}) == (fs({1, 3, 4}), fs({3, 4}), fs({2}))
    assert up_sets(d, 0, {2}) == (fs({2}), fs(), fs({1, 3, 4}))
    k4 = decompose(cat["K4"])
    assert up_sets(k4, 0, {1}) == (fs({1}), fs(), fs({2, 3, 4}))
    with pytest.raises(PreconditionError):
        up_sets(d, 0, {1, 2})


def test_tpath_examples_on_paw(cat):
    g = cat["PAW"]
    m = pairs_to_matching(g, [(1, 2), (3, 4)])
    d = decompose(g)
    assert tpath_construct(g, m, d, 0, "i", 4).vertices == (4, 3, 1)
    assert tpath_construct(g, m, d, 0, "ii", 1, 2).vertices == (1, 2)
    assert tpath_construct(g, m, d, 0, "iii", 1, 2).vertices == (1, 2)


def test_tpath_rejects_bad_variant(cat):
    g = cat["PAW"]
    d = decompose(g)
    with pytest.raises(PreconditionError):
        tpath_construct(g, pairs_to_matching(g, [(1, 2), (3, 4)]), d, 0, "v", 1)


def test_separating_unions(cat):
    d = decompose(cat["PAW"])
    assert d.is_separating({1, 2})
    assert d.is_separating({1, 2, 3, 4})
    assert not d.is_separating({1, 3})


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([4, 6, 8]), p=st.sampled_from([0.1, 0.2, 0.3, 0.5]), seed=st.integers(0, 10**6))
def test_order_matches_definition(n, p, seed):
    g = random_factorizable_graph(n, p, seed)
    d = decompose(g)
    comps = list(d.components)
    for a in d.ids:
        for b in d.ids:
            assert d.leq(a, b) == leq_bruteforce(g, comps[a], comps[b], comps)


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([4, 6, 8, 10]), p=st.floats(0, 1), seed=st.integers(0, 10**6))
def test_classes_match_enumeration(n, p, seed):
    g = random_factorizable_graph(n, p, seed)
    d = decompose(g)
    for h in d.ids:
        assert sorted(map(sorted, d.classes[h])) == sorted(map(sorted, kl_classes_bruteforce(g, d.components[h])))


def test_extremes_of_the_generator():
    sparse = decompose(random_factorizable_graph(8, 0.0, 3))
    assert len(sparse.components) == 4 and not sparse.strict_pairs()
    assert len(decompose(random_factorizable_graph(8, 1.0, 3)).components) == 1
