import pytest

from tightcut.errors import EnumerationBoundError, PreconditionError
from tightcut.matching import is_factorizable
from tightcut.testkit import (CATALOG_BRICKS, canonical_shore, catalog, enumerate_perfect_matchings,
                              random_corpus, random_factorizable_graph, star_shores, tight_cuts_bruteforce)

from conftest import pairs_to_matching


def test_catalog_is_stable():
    assert catalog() == catalog()
    assert set(CATALOG_BRICKS) <= set(catalog())


def test_enumeration_counts(cat):
    assert len(enumerate_perfect_matchings(cat["K4"])) == 3
    assert enumerate_perfect_matchings(cat["P4"]) == [pairs_to_matching(cat["P4"], [(1, 2), (3, 4)])]
    assert enumerate_perfect_matchings(cat["P3"]) == []
    assert len(enumerate_perfect_matchings(cat["PETERSEN"])) == 6


def test_enumeration_bound(cat, monkeypatch):
    with pytest.raises(EnumerationBoundError):
        enumerate_perfect_matchings(cat["PETERSEN"], bound=8)
    monkeypatch.setenv("TIGHTCUT_ENUM_BOUND", "4")
    with pytest.raises(EnumerationBoundError):
        enumerate_perfect_matchings(cat["PRISM"])
    monkeypatch.setenv("TIGHTCUT_ENUM_BOUND", "lots")
    with pytest.raises(PreconditionError):
        enumerate_perfect_matchings(cat["K4"])


def test_tight_cuts(cat):
    k4 = cat["K4"]
    assert set(tight_cuts_bruteforce(k4)) == star_shores(k4)
    assert len(tight_cuts_bruteforce(cat["PRISM"])) == 6
    c6 = cat["C6"]
    cuts = set(tight_cuts_bruteforce(c6))
    assert star_shores(c6) < cuts
    assert canonical_shore(c6, {1, 2, 3}) in cuts


def test_generator():
    g = random_factorizable_graph(8, 0.3, 11)
    assert g == random_factorizable_graph(8, 0.3, 11)
    assert is_factorizable(g)
    assert len(random_factorizable_graph(6, 0.0, 1).edges) == 3
    assert len(random_factorizable_graph(6, 1.0, 1).edges) == 15
    with pytest.raises(PreconditionError):
        random_factorizable_graph(5, 0.5, 1)


def test_corpus_shape():
    corpus = random_corpus()
    assert len(corpus) == 100
    assert max(len(g) for _, g in corpus) <= 12
    assert all(is_factorizable(g) for _, g in corpus)
