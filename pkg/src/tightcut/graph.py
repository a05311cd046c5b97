"""Immutable undirected multigraphs with stable vertex and edge ids."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import GraphInputError, PreconditionError

Vertex = int
EdgeId = int


class Graph:
    """Undirected multigraph without loops.

    Vertices are integers. Every edge carries an integer id that survives
    induce/delete/contract, so a matching of a subgraph is directly a
    matching of the host graph.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_nbrs", "_hash", "__weakref__")

    def __init__(self, vertices: Iterable[Vertex] = (),
                 edges: Mapping[EdgeId, tuple[Vertex, Vertex]] | None = None):
        vs = frozenset(vertices)
        es: dict[EdgeId, tuple[Vertex, Vertex]] = {}
        for eid, (a, b) in (edges or {}).items():
            if a == b:
                raise GraphInputError(f"edge {eid} is a loop at vertex {a}")
            if a not in vs or b not in vs:
                raise GraphInputError(f"edge {eid} has an endpoint outside the vertex set")
            es[eid] = (a, b) if a < b else (b, a)
        self._vertices = vs
        self._edges = MappingProxyType(dict(sorted(es.items())))
        self._adj = None
        self._nbrs = None
        self._hash = None

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[Vertex, Vertex]],
                   vertices: Iterable[Vertex] | None = None) -> "Graph":
        """Build a graph from endpoint pairs; edge ids are 0, 1, ... in order."""
        pairs = list(pairs)
        if vertices is None:
            vertices = {v for p in pairs for v in p}
        return cls(vertices, dict(enumerate(pairs)))

    @property
    def vertices(self) -> frozenset[Vertex]:
        return self._vertices

    @property
    def edges(self) -> Mapping[EdgeId, tuple[Vertex, Vertex]]:
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._vertices

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self):
        pairs = ", ".join(f"{a}-{b}" for a, b in self._edges.values())
        return f"Graph(n={len(self._vertices)}, edges=[{pairs}])"

    def _build_adjacency(self):
        adj = {v: [] for v in self._vertices}
        for eid, (a, b) in self._edges.items():
            adj[a].append((b, eid))
            adj[b].append((a, eid))
        self._adj = {v: tuple(sorted(lst)) for v, lst in adj.items()}
        self._nbrs = {v: tuple(sorted({w for w, _ in lst})) for v, lst in self._adj.items()}

    def incident(self, v: Vertex) -> tuple[tuple[Vertex, EdgeId], ...]:
        """(neighbor, edge id) pairs at ``v``, sorted."""
        if self._adj is None:
            self._build_adjacency()
        return self._adj[v]

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        """Distinct neighbors of ``v`` in increasing order."""
        if self._nbrs is None:
            self._build_adjacency()
        return self._nbrs[v]

    def endpoints(self, eid: EdgeId) -> tuple[Vertex, Vertex]:
        return self._edges[eid]

    def edge_between(self, a: Vertex, b: Vertex) -> EdgeId | None:
        """Least edge id joining ``a`` and ``b``, or None."""
        for w, eid in self.incident(a):
            if w == b:
                return eid
        return None

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self._vertices)


def _check_subset(g: Graph, x) -> frozenset:
    x = frozenset(x)
    unknown = x - g.vertices
    if unknown:
        raise GraphInputError(f"unknown vertex ids: {sorted(unknown)}")
    return x


def induced_subgraph(g: Graph, x: Iterable[Vertex]) -> Graph:
    """G[X]: vertex set X and every edge of g with both ends in X."""
    x = _check_subset(g, x)
    if x == g.vertices:
        return g
    return Graph(x, {e: ab for e, ab in g.edges.items() if ab[0] in x and ab[1] in x})


def delete_vertices(g: Graph, x: Iterable[Vertex]) -> Graph:
    """G - X."""
    x = _check_subset(g, x)
    return induced_subgraph(g, g.vertices - x)


def contract(g: Graph, x: Iterable[Vertex], representative: Vertex | None = None) -> Graph:
    """G/X: collapse X to one vertex, keeping parallel edges and dropping loops.

    The collapsed vertex keeps the id ``representative`` (default: least id in X),
    which must be a member of X.
    """
    x = _check_subset(g, x)
    if not x:
        raise PreconditionError("cannot contract an empty vertex set")
    rep = min(x) if representative is None else representative
    if rep not in x:
        raise PreconditionError("representative must belong to the contracted set")
    edges = {}
    for eid, (a, b) in g.edges.items():
        a2 = rep if a in x else a
        b2 = rep if b in x else b
        if a2 != b2:
            edges[eid] = (a2, b2)
    return Graph((g.vertices - x) | {rep}, edges)


def connected_components(g: Graph, within: Iterable[Vertex] | None = None) -> list[frozenset[Vertex]]:
    """Vertex sets of the connected components, ordered by least vertex id.

    With ``within``, components of the induced subgraph on that set.
    """
    allowed = g.vertices if within is None else frozenset(within)
    seen = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if b in allowed and b not in seen:
                    seen.add(b)
                    comp.add(b)
                    queue.append(b)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph, within: Iterable[Vertex] | None = None) -> bool:
    return len(connected_components(g, within)) <= 1


def is_three_connected(g: Graph) -> bool:
    """At least four vertices and connected after deleting any two vertices."""
    if len(g) < 4:
        return False
    for a, b in combinations(g.sorted_vertices(), 2):
        if not is_connected(g, g.vertices - {a, b}):
            return False
    return True


def neighborhood(g: Graph, x: Iterable[Vertex]) -> frozenset[Vertex]:
    """N_G(X): vertices outside X adjacent to some vertex of X."""
    x = frozenset(x)
    return frozenset(w for a in x for w in g.neighbors(a) if w not in x)


def edges_between(g: Graph, x: Iterable[Vertex], y: Iterable[Vertex]) -> frozenset[EdgeId]:
    """E_G[X, Y]: edges with one end in X and the other in Y."""
    x, y = frozenset(x), frozenset(y)
    return frozenset(e for e, (a, b) in g.edges.items()
                     if (a in x and b in y) or (b in x and a in y))


def cut(g: Graph, x: Iterable[Vertex]) -> frozenset[EdgeId]:
    """delta_G(X)."""
    x = frozenset(x)
    return frozenset(e for e, (a, b) in g.edges.items() if (a in x) != (b in x))
