"""Canonical decomposition of factorizable graphs.

Factor-components, the partial order on them, the generalized
Kotzig-Lovasz partition, the tagging of upper components by classes, and
the four alternating-path constructions built on that structure.

Conventions for the per-class vertex sets (S a class of component H):

* ``vupstar(S)`` is S together with every upper component tagged to S,
* ``vup(S) = vupstar(S) - S``,
* ``vcoup(S) = vupstar(H) - vupstar(S)``, which excludes S.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

from .altpaths import AltPath, Kind, balanced_path, classify, confined_saturated_path
from .errors import NotFactorizableError, PreconditionError, ProofClaimError
from .graph import Graph, Vertex, connected_components, contract, induced_subgraph, is_connected, neighborhood
from .matching import (allowed_edges, find_perfect_matching, is_factor_critical, is_perfect,
                       perfect_matching_avoiding)

VertexSet = frozenset


@dataclass(frozen=True)
class FactorComponent:
    id: int
    vertices: frozenset[Vertex]
    graph: Graph


def factor_components(g: Graph) -> list[FactorComponent]:
    """Induced subgraphs on the components of the allowed-edge subgraph, by least vertex."""
    pm = find_perfect_matching(g)
    if pm is None:
        raise NotFactorizableError("graph is not factorizable: it has no perfect matching")
    return [FactorComponent(i, c, induced_subgraph(g, c)) for i, c in enumerate(_component_sets(g, pm))]


def _component_sets(g: Graph, pm) -> list[frozenset]:
    allowed = allowed_edges(g, pm)
    sub = Graph(g.vertices, {e: g.endpoints(e) for e in allowed})
    return connected_components(sub)


def _leq_by_definition(g: Graph, comps: list[frozenset], pm, i: int, j: int) -> bool:
    if i == j:
        return True
    h1, h2 = comps[i], comps[j]
    others = [c for k, c in enumerate(comps) if k not in (i, j)]
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            x = h1 | h2
            for c in extra:
                x = x | c
            if not is_connected(g, x):
                continue
            folded = contract(induced_subgraph(g, x), h1)
            seed = [e for e in pm if all(v in x and v not in h1 for v in g.endpoints(e))]
            if is_factor_critical(folded, seed):
                return True
    return False


def _check_partial_order(order):
    k = len(order)
    for a in range(k):
        if not order[a][a]:
            raise ProofClaimError(f"order is not reflexive at component {a}")
        for b in range(k):
            if a != b and order[a][b] and order[b][a]:
                raise ProofClaimError(f"order is not antisymmetric on components {a}, {b}")
    for a, b, c in permutations(range(k), 3):
        if order[a][b] and order[b][c] and not order[a][c]:
            raise ProofClaimError(f"order is not transitive on components {a}, {b}, {c}")


def _kl_classes(g: Graph, comp: frozenset, pm) -> tuple[frozenset, ...]:
    vs = sorted(comp)
    sim = {(u, v): perfect_matching_avoiding(g, pm, (u, v)) is None for u, v in combinations(vs, 2)}

    def related(u, v):
        return u == v or sim[(u, v) if u < v else (v, u)]

    classes = []
    placed = set()
    for u in vs:
        if u in placed:
            continue
        cls = frozenset(v for v in vs if related(u, v))
        if cls & placed:
            raise ProofClaimError("relation ~ is not transitive")
        for a, b in combinations(sorted(cls), 2):
            if not related(a, b):
                raise ProofClaimError(f"relation ~ is not transitive ({a}, {b} in one class)")
        placed |= cls
        classes.append(cls)
    return tuple(classes)


class CanonicalDecomposition:
    """The canonical decomposition of one factorizable graph (immutable)."""

    def __init__(self, graph: Graph, components, order, classes):
        self.graph = graph
        self.components: tuple[frozenset, ...] = tuple(components)
        self.order: tuple[tuple[bool, ...], ...] = tuple(tuple(r) for r in order)
        self.classes: tuple[tuple[frozenset, ...], ...] = tuple(classes)
        self.component_of = {v: i for i, c in enumerate(self.components) for v in c}
        self.class_of = {v: s for cls in self.classes for s in cls for v in s}
        self._tags: dict[int, dict] = {}
        self._up: dict[tuple[int, frozenset], tuple[frozenset, frozenset, frozenset]] = {}

    def __repr__(self):
        return f"CanonicalDecomposition(components={[sorted(c) for c in self.components]})"

    @property
    def ids(self) -> range:
        return range(len(self.components))

    def leq(self, a: int, b: int) -> bool:
        return self.order[a][b]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.ids for b in self.ids if a != b and self.order[a][b]]

    def upper_bounds(self, h: int) -> list[int]:
        return [b for b in self.ids if self.order[h][b]]

    def minimal(self) -> list[int]:
        """pmin: components with no other lower bound."""
        return [b for b in self.ids if not any(self.order[a][b] for a in self.ids if a != b)]

    @functools.lru_cache(maxsize=None)
    def vupstar(self, h: int) -> frozenset:
        return frozenset().union(*(self.components[b] for b in self.upper_bounds(h)))

    def vup(self, h: int) -> frozenset:
        return self.vupstar(h) - self.components[h]

    def tags(self, h: int) -> dict[frozenset, frozenset]:
        """Each connected component of G[vup(h)] mapped to the class of h it is tagged with."""
        if h not in self._tags:
            out = {}
            comp = self.components[h]
            for k in connected_components(self.graph, self.vup(h)):
                nb = neighborhood(self.graph, k) & comp
                if not nb:
                    raise ProofClaimError(f"upper component {sorted(k)} has no neighbor in component {h}")
                hits = [s for s in self.classes[h] if nb <= s]
                if len(hits) != 1:
                    raise ProofClaimError(f"upper component {sorted(k)} is not tagged by a single class")
                out[k] = hits[0]
            self._tags[h] = out
        return self._tags[h]

    def up_sets(self, h: int, s: frozenset) -> tuple[frozenset, frozenset, frozenset]:
        """(vupstar(S), vup(S), vcoup(S)) for a class S of component h."""
        s = frozenset(s)
        if s not in self.classes[h]:
            raise PreconditionError(f"{sorted(s)} is not a class of component {h}")
        key = (h, s)
        if key not in self._up:
            star = set(s)
            for k, t in self.tags(h).items():
                if t == s:
                    star |= k
            star = frozenset(star)
            self._up[key] = (star, star - s, self.vupstar(h) - star)
        return self._up[key]

    def class_above(self, h: int, v: Vertex) -> frozenset:
        """The class S of h with v in vupstar(S)."""
        for s in self.classes[h]:
            if v in self.up_sets(h, s)[0]:
                return s
        raise PreconditionError(f"vertex {v} is not in the tower over component {h}")

    def component_containing(self, vertices: Iterable[Vertex]) -> int:
        ids = {self.component_of[v] for v in vertices}
        if len(ids) != 1:
            raise PreconditionError("vertex set is not inside a single factor-component")
        return ids.pop()

    def is_separating(self, x: Iterable[Vertex]) -> bool:
        x = frozenset(x)
        return all(c <= x or not (c & x) for c in self.components)


@functools.lru_cache(maxsize=512)
def decompose(g: Graph) -> CanonicalDecomposition:
    """Build (and verify) the full canonical decomposition of g."""
    pm = find_perfect_matching(g)
    if pm is None:
        raise NotFactorizableError("graph is not factorizable: it has no perfect matching")
    comps = _component_sets(g, pm)
    order = _order_matrix(g, comps, pm)
    classes = [_kl_classes(g, c, pm) for c in comps]
    d = CanonicalDecomposition(g, comps, order, classes)
    for h in d.ids:
        d.tags(h)
    return d


def _order_matrix(g, comps, pm):
    k = len(comps)
    order = [[_leq_by_definition(g, comps, pm, a, b) for b in range(k)] for a in range(k)]
    _check_partial_order(order)
    return order


def _valid(d: CanonicalDecomposition, h: int):
    if not 0 <= h < len(d.components):
        raise PreconditionError(f"invalid component id {h}")


def leq(g: Graph, d: CanonicalDecomposition | None, h1: int, h2: int) -> bool:
    """Whether h1 precedes h2, decided from the definition by enumerating separating sets."""
    d = d or decompose(g)
    _valid(d, h1)
    _valid(d, h2)
    pm = find_perfect_matching(g)
    return _leq_by_definition(g, list(d.components), pm, h1, h2)


def build_poset(g: Graph) -> tuple[tuple[bool, ...], ...]:
    """Relation matrix ``order[a][b] == (a precedes b)``; partial-order axioms are verified."""
    pm = find_perfect_matching(g)
    if pm is None:
        raise NotFactorizableError("graph is not factorizable: it has no perfect matching")
    comps = _component_sets(g, pm)
    return tuple(tuple(r) for r in _order_matrix(g, comps, pm))


def kl_partition(g: Graph, h: int, d: CanonicalDecomposition | None = None) -> list[frozenset]:
    """Classes of ~ inside component h (u ~ v iff g - u - v has no perfect matching)."""
    d = d or decompose(g)
    _valid(d, h)
    pm = find_perfect_matching(g)
    return list(_kl_classes(g, d.components[h], pm))


def tag_upper_components(g: Graph, d: CanonicalDecomposition | None, h: int) -> dict[frozenset, frozenset]:
    d = d or decompose(g)
    _valid(d, h)
    return dict(d.tags(h))


def up_sets(d: CanonicalDecomposition, h: int, s: Iterable[Vertex]):
    _valid(d, h)
    return d.up_sets(h, frozenset(s))


def _restricted_perfect(g, m, conf) -> bool:
    inner = [e for e in m if all(v in conf for v in g.endpoints(e))]
    return len(inner) * 2 == len(conf)


def tpath_construct(g: Graph, m, d: CanonicalDecomposition, h: int, variant: str,
                    x: Vertex, y: Vertex | None = None) -> AltPath:
    """Alternating path of the requested variant inside the tower over h.

    i:   x in vupstar(S): balanced path from x to some y in S, other vertices in vup(S).
    ii:  x in S, y in T (S != T): saturated path inside vupstar(H) - vup(S) - vup(T).
    iii: x in S, y in vcoup(S): saturated path inside vupstar(H) - vup(S).
    iv:  x in vupstar(S), y in vupstar(T), S != T: saturated path inside vupstar(H).
    """
    _valid(d, h)
    m = frozenset(m)
    if not is_perfect(g, m):
        raise PreconditionError("matching is not perfect")
    tower = d.vupstar(h)
    if x not in tower or (variant != "i" and (y is None or y not in tower)):
        raise PreconditionError("endpoints must lie in the tower over the component")
    s = d.class_above(h, x)
    star_s, up_s, coup_s = d.up_sets(h, s)

    if variant == "i":
        for target in sorted(s):
            conf = up_s | {target}
            if x not in conf:
                continue
            path = balanced_path(g, m, x, target, conf)
            if path is not None:
                _check_kind(g, m, path, Kind.BALANCED if x != target else Kind.TRIVIAL, x, target)
                _check_confined(path.vertices[:-1], up_s)
                return path
        raise ProofClaimError(f"no balanced path from {x} into its class {sorted(s)}")

    if variant == "ii":
        if x not in s:
            raise PreconditionError("variant ii needs x in its class")
        t = d.class_above(h, y)
        if y not in t or t == s:
            raise PreconditionError("variant ii needs y in a different class")
        conf = tower - up_s - d.up_sets(h, t)[1]
    elif variant == "iii":
        if x not in s or y not in coup_s:
            raise PreconditionError("variant iii needs x in S and y in vcoup(S)")
        conf = tower - up_s
    elif variant == "iv":
        t = d.class_above(h, y)
        if t == s:
            raise PreconditionError("variant iv needs ends above different classes")
        conf = tower
    else:
        raise PreconditionError(f"unknown variant {variant!r}")
    if not _restricted_perfect(g, m, conf):
        raise ProofClaimError("matching is not perfect on the confining set")
    path = confined_saturated_path(g, m, x, y, conf)
    if path is None:
        raise ProofClaimError(f"variant {variant}: no saturated path between {x} and {y}")
    _check_kind(g, m, path, Kind.SATURATED, x, y)
    _check_confined(path.vertices, conf)
    return path


def _check_kind(g, m, path: AltPath, kind: Kind, start, end):
    c = classify(path.vertices, g, m)
    if c.kind is not kind or path.start != start or path.end != end:
        raise ProofClaimError(f"constructed path {path.vertices} is {c}, expected {kind.value}")
    if kind is Kind.BALANCED and (c.source, c.target) != (start, end):
        raise ProofClaimError(f"balanced path {path.vertices} has the wrong orientation")


def _check_confined(vertices, conf):
    if not set(vertices) <= set(conf):
        raise ProofClaimError(f"path {tuple(vertices)} leaves its confining set")
