import pytest

from tightcut.graph import Graph
from tightcut.testkit import catalog, random_corpus


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


def pairs_to_matching(g: Graph, pairs):
    return frozenset(g.edge_between(a, b) for a, b in pairs)
