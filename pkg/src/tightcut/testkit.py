"""Brute-force oracles, the fixed graph catalog and a seeded random generator.

Nothing here calls into the blossom search or the decomposition code; the
oracles are meant to check those paths independently.
"""

from __future__ import annotations

import os
import random
from itertools import combinations
from typing import Iterable

from .errors import EnumerationBoundError, NotFactorizableError, PreconditionError
from .graph import Graph, Vertex

DEFAULT_ENUM_BOUND = 16


def enum_bound() -> int:
    """Enumeration size bound; TIGHTCUT_ENUM_BOUND overrides the default of 16."""
    raw = os.environ.get("TIGHTCUT_ENUM_BOUND")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"TIGHTCUT_ENUM_BOUND must be an integer, got {raw!r}") from None


def _check_bound(g: Graph, bound: int | None):
    bound = enum_bound() if bound is None else bound
    if len(g) > bound:
        raise EnumerationBoundError(f"{len(g)} vertices exceeds the enumeration bound {bound}")


def enumerate_perfect_matchings(g: Graph, bound: int | None = None) -> list[frozenset[int]]:
    """Every perfect matching, by backtracking on the least uncovered vertex."""
    _check_bound(g, bound)
    out: list[frozenset[int]] = []
    if len(g) % 2:
        return out
    order = g.sorted_vertices()
    covered: set[Vertex] = set()
    chosen: list[int] = []

    def rec(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            out.append(frozenset(chosen))
            return
        v = order[i]
        covered.add(v)
        for w, eid in g.incident(v):
            if w in covered:
                continue
            covered.add(w)
            chosen.append(eid)
            rec(i + 1)
            chosen.pop()
            covered.discard(w)
        covered.discard(v)

    rec(0)
    return out


def allowed_edges_bruteforce(g: Graph, bound: int | None = None) -> frozenset[int]:
    out = set()
    for m in enumerate_perfect_matchings(g, bound):
        out |= m
    return frozenset(out)


def _minus(g: Graph, removed) -> Graph:
    removed = set(removed)
    keep = g.vertices - removed
    return Graph(keep, {e: ab for e, ab in g.edges.items() if ab[0] in keep and ab[1] in keep})


def _has_pm(g: Graph) -> bool:
    return bool(enumerate_perfect_matchings(g, bound=10**9))


def factorizable_bruteforce(g: Graph, removed: Iterable[Vertex] = ()) -> bool:
    """Whether g minus ``removed`` has a perfect matching, by enumeration."""
    return _has_pm(_minus(g, removed))


def kl_classes_bruteforce(g: Graph, component: Iterable[Vertex]) -> list[frozenset[Vertex]]:
    """Classes of u ~ v (g - u - v has no perfect matching) inside one factor-component."""
    vs = sorted(component)
    out: list[frozenset] = []
    for u in vs:
        if any(u in c for c in out):
            continue
        out.append(frozenset([u] + [w for w in vs if w > u and not factorizable_bruteforce(g, (u, w))]))
    return out


def factor_components_bruteforce(g: Graph) -> list[frozenset[Vertex]]:
    """Components of the union of all perfect matchings, found by enumeration."""
    allowed = allowed_edges_bruteforce(g)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for eid in allowed:
        a, b = g.endpoints(eid)
        parent[find(a)] = find(b)
    groups: dict[Vertex, set] = {}
    for v in g.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def _is_factor_critical_bruteforce(g: Graph) -> bool:
    if len(g) == 1:
        return True
    return all(_has_pm(_minus(g, [v])) for v in g.vertices)


def _contract(g: Graph, x: frozenset) -> Graph:
    rep = min(x)
    edges = {}
    for eid, (a, b) in g.edges.items():
        a2 = rep if a in x else a
        b2 = rep if b in x else b
        if a2 != b2:
            edges[eid] = (a2, b2)
    return Graph((g.vertices - x) | {rep}, edges)


def leq_bruteforce(g: Graph, h1: frozenset, h2: frozenset,
                   components: list[frozenset] | None = None) -> bool:
    """Definition of the order on factor-components, by direct enumeration."""
    comps = components if components is not None else factor_components_bruteforce(g)
    others = [c for c in comps if c != h1 and c != h2]
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            x = set(h1) | set(h2)
            for c in extra:
                x |= c
            sub = _minus(g, g.vertices - x)
            if _is_factor_critical_bruteforce(_contract(sub, frozenset(h1))):
                return True
    return False


def canonical_shore(g: Graph, shore: Iterable[Vertex]) -> frozenset[Vertex]:
    """The side of the cut containing the least vertex id."""
    shore = frozenset(shore)
    return shore if min(g.vertices) in shore else g.vertices - shore


def canonical_shores(g: Graph, min_size: int = 1, max_size: int | None = None):
    """All canonical shores (sides holding the least vertex), proper and non-empty."""
    vs = g.sorted_vertices()
    first, rest = vs[0], vs[1:]
    max_size = len(vs) - 1 if max_size is None else max_size
    for r in range(0, len(rest) + 1):
        size = r + 1
        if size < min_size or size > max_size or size == len(vs):
            continue
        for extra in combinations(rest, r):
            yield frozenset((first,) + extra)


def star_shores(g: Graph) -> set[frozenset[Vertex]]:
    return {canonical_shore(g, {v}) for v in g.vertices}


def tight_cuts_bruteforce(g: Graph, bound: int | None = None) -> list[frozenset[Vertex]]:
    """Canonical shores whose cut meets every perfect matching in exactly one edge."""
    _check_bound(g, bound)
    pms = enumerate_perfect_matchings(g, bound)
    if not pms:
        raise NotFactorizableError("graph is not factorizable: it has no perfect matching")
    ends = [[g.endpoints(e) for e in m] for m in pms]
    out = []
    for shore in canonical_shores(g):
        if len(shore) % 2 == 0:
            continue
        if all(sum((a in shore) != (b in shore) for a, b in pairs) == 1 for pairs in ends):
            out.append(shore)
    return out


def random_factorizable_graph(n: int, p: float, seed: int) -> Graph:
    """Plant a random perfect matching on 1..n, then add each other pair with probability p."""
    if n % 2 or n < 0:
        raise PreconditionError("n must be a non-negative even number")
    if not 0.0 <= p <= 1.0:
        raise PreconditionError("p must lie in [0, 1]")
    rng = random.Random(seed)
    vs = list(range(1, n + 1))
    perm = vs[:]
    rng.shuffle(perm)
    planted = {tuple(sorted(perm[i:i + 2])) for i in range(0, n, 2)}
    pairs = []
    for a, b in combinations(vs, 2):
        if (a, b) in planted or rng.random() < p:
            pairs.append((a, b))
    return Graph.from_edges(pairs, vs)


def random_corpus(count: int = 100, sizes=(4, 6, 8, 10, 12), probs=(0.1, 0.3, 0.6),
                  seed: int = 2024) -> list[tuple[str, Graph]]:
    """A fixed list of (label, graph) pairs cycling through sizes and probabilities."""
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = probs[(i // len(sizes)) % len(probs)]
        s = seed + i
        out.append((f"rand-n{n}-p{p}-s{s}", random_factorizable_graph(n, p, s)))
    return out


def _cycle(n, start=1):
    return [(start + i, start + (i + 1) % n) for i in range(n)]


def catalog() -> dict[str, Graph]:
    """Named fixed graphs; identical on every call."""
    k4 = [(a, b) for a, b in combinations(range(1, 5), 2)]
    k33 = [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)]
    prism = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]
    petersen = (_cycle(5) + [(i, i + 5) for i in range(1, 6)]
                + [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)])
    w5 = _cycle(5) + [(i, 6) for i in range(1, 6)]
    return {
        "P3": Graph.from_edges([(1, 2), (2, 3)]),
        "P4": Graph.from_edges([(1, 2), (2, 3), (3, 4)]),
        "PAW": Graph.from_edges([(1, 2), (1, 3), (1, 4), (3, 4)]),
        "C6": Graph.from_edges(_cycle(6)),
        "K4": Graph.from_edges(k4),
        "K33": Graph.from_edges(k33),
        "PRISM": Graph.from_edges(prism),
        "PETERSEN": Graph.from_edges(petersen),
        "W5": Graph.from_edges(w5),
    }


CATALOG_BRICKS = ("K4", "W5", "PRISM", "PETERSEN")
