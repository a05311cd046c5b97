"""Perfect matchings, factor-criticality, allowed edges and brick recognition.

Matchings are frozensets of edge ids of a host graph. The search engine is
Edmonds' blossom algorithm for maximum cardinality; it can be warm-started
from an existing matching so that "is G - X factorizable?" costs a couple
of augmenting-path searches instead of a full rebuild.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from .errors import NotFactorizableError, PreconditionError
from .graph import EdgeId, Graph, Vertex, is_connected

Matching = frozenset  # of EdgeId


def mate_map(g: Graph, m: Iterable[EdgeId]) -> dict[Vertex, Vertex]:
    """Vertex -> partner for the edges of ``m``; raises if ``m`` is not a matching."""
    mate = {}
    for eid in m:
        a, b = g.endpoints(eid)
        if a in mate or b in mate:
            raise PreconditionError(f"edge set is not a matching (vertex {a if a in mate else b})")
        mate[a] = b
        mate[b] = a
    return mate


def is_matching(g: Graph, m: Iterable[EdgeId]) -> bool:
    try:
        mate_map(g, m)
    except (PreconditionError, KeyError):
        return False
    return True


def is_perfect(g: Graph, m: Iterable[EdgeId]) -> bool:
    m = list(m)
    if not all(e in g.edges for e in m):
        return False
    try:
        mate = mate_map(g, m)
    except PreconditionError:
        return False
    return len(mate) == len(g)


def _edmonds_search(g: Graph, mate: dict, root: Vertex, active: frozenset) -> bool:
    """Grow an alternating tree from the exposed ``root``; augment ``mate`` on success."""
    parent: dict[Vertex, Vertex] = {}
    base: dict[Vertex, Vertex] = {}
    used = {root}
    queue = deque([root])

    def b(v):
        return base.get(v, v)

    def lca(x, y):
        seen = set()
        while True:
            x = b(x)
            seen.add(x)
            if x not in mate:
                break
            x = parent[mate[x]]
        while True:
            y = b(y)
            if y in seen:
                return y
            y = parent[mate[y]]

    def mark_path(v, bs, child, blossom):
        while b(v) != bs:
            blossom.add(b(v))
            blossom.add(b(mate[v]))
            parent[v] = child
            child = mate[v]
            v = parent[child]

    while queue:
        v = queue.popleft()
        for to in g.neighbors(v):
            if to not in active or b(v) == b(to) or mate.get(v) == to:
                continue
            if to == root or (to in mate and mate[to] in parent):
                cb = lca(v, to)
                blossom = set()
                mark_path(v, cb, to, blossom)
                mark_path(to, cb, v, blossom)
                for i in active:
                    if b(i) in blossom:
                        base[i] = cb
                        if i not in used:
                            used.add(i)
                            queue.append(i)
            elif to not in parent:
                parent[to] = v
                if to not in mate:
                    # augment along the tree path ending at `to`
                    while to is not None:
                        pv = parent[to]
                        nxt = mate.get(pv)
                        mate[to] = pv
                        mate[pv] = to
                        to = nxt
                    return True
                used.add(mate[to])
                queue.append(mate[to])
    return False


def _to_edges(g: Graph, mate: dict, preferred: Iterable[EdgeId] = ()) -> Matching:
    keep = {}
    for eid in preferred:
        a, b = g.endpoints(eid)
        if mate.get(a) == b:
            keep[(a, b)] = eid
    out = set()
    for a, b in mate.items():
        if a < b:
            out.add(keep.get((a, b), g.edge_between(a, b)))
    return frozenset(out)


def _complete(g: Graph, seed: Iterable[EdgeId] = (), removed: Iterable[Vertex] = (),
              perfect: bool = True) -> dict | None:
    """Extend ``seed`` (minus edges touching ``removed``) to a maximum matching of g - removed.

    With ``perfect`` set, returns None as soon as some vertex is certainly left exposed.
    """
    removed = frozenset(removed)
    active = g.vertices - removed
    mate = {}
    for eid in seed:
        a, b = g.endpoints(eid)
        if a not in removed and b not in removed:
            mate[a] = b
            mate[b] = a
    for v in sorted(active):
        if v in mate:
            continue
        if not _edmonds_search(g, mate, v, active) and perfect:
            return None
    return mate


def maximum_matching(g: Graph) -> Matching:
    """A maximum cardinality matching of g (deterministic for a fixed graph)."""
    return _to_edges(g, _complete(g, perfect=False))


def find_perfect_matching(g: Graph, seed: Iterable[EdgeId] = ()) -> Matching | None:
    """A perfect matching of g, or None.

    ``seed`` is an optional matching to warm-start from; its edges are kept
    wherever the search does not need to flip them.
    """
    if len(g) % 2:
        return None
    seed = tuple(seed)
    mate = _complete(g, seed)
    if mate is None:
        return None
    return _to_edges(g, mate, seed)


def perfect_matching_avoiding(g: Graph, m: Iterable[EdgeId], removed: Iterable[Vertex]) -> Matching | None:
    """A perfect matching of g - removed, warm-started from the matching ``m`` of g."""
    removed = frozenset(removed)
    if (len(g) - len(removed)) % 2:
        return None
    m = tuple(m)
    mate = _complete(g, m, removed)
    if mate is None:
        return None
    return _to_edges(g, mate, m)


def perfect_matching_containing(g: Graph, eid: EdgeId, seed: Iterable[EdgeId] = ()) -> Matching | None:
    """A perfect matching of g that uses edge ``eid``, or None if the edge is not allowed."""
    a, b = g.endpoints(eid)
    rest = perfect_matching_avoiding(g, seed, {a, b})
    return None if rest is None else rest | {eid}


def is_factorizable(g: Graph) -> bool:
    return find_perfect_matching(g) is not None


def _factor_critical_from(g: Graph, near: dict) -> bool:
    for v in sorted(g.vertices):
        mate = dict(near)
        if v in mate:
            w = mate.pop(v)
            del mate[w]
        active = g.vertices - {v}
        for r in sorted(active):
            if r not in mate and not _edmonds_search(g, mate, r, active):
                return False
    return True


def is_factor_critical(g: Graph, seed: Iterable[EdgeId] = ()) -> bool:
    """True iff g is a single vertex or g - v is factorizable for every vertex v.

    ``seed`` optionally warm-starts the search with a matching of g.
    """
    if len(g) <= 1:
        return True
    if len(g) % 2 == 0 or not is_connected(g):
        return False
    near = _complete(g, seed, perfect=False)
    if len(near) < len(g) - 1:
        return False
    return _factor_critical_from(g, near)


def allowed_edges(g: Graph, m: Iterable[EdgeId] | None = None) -> frozenset[EdgeId]:
    """Edges contained in some perfect matching (per-edge deletion test)."""
    if m is None:
        m = find_perfect_matching(g)
        if m is None:
            raise NotFactorizableError("graph is not factorizable: it has no perfect matching")
    m = frozenset(m)
    out = set(m)
    cache: dict[tuple[Vertex, Vertex], bool] = {}
    for eid, (a, b) in g.edges.items():
        if eid in out:
            continue
        if (a, b) not in cache:
            cache[(a, b)] = perfect_matching_avoiding(g, m, (a, b)) is not None
        if cache[(a, b)]:
            out.add(eid)
    return frozenset(out)


def brick_violation(g: Graph) -> tuple[Vertex, Vertex] | None:
    """First pair {a, b} (in sorted order) whose deletion leaves a disconnected
    or non-factorizable graph; None when every pair passes."""
    m = find_perfect_matching(g)
    vs = g.sorted_vertices()
    for a, b in combinations(vs, 2):
        rest = g.vertices - {a, b}
        if not is_connected(g, rest):
            return (a, b)
        if m is None or perfect_matching_avoiding(g, m, (a, b)) is None:
            return (a, b)
    return None


def is_brick(g: Graph) -> bool:
    """At least four vertices, even order, and every G - a - b connected and factorizable."""
    if len(g) < 4 or len(g) % 2:
        return False
    return brick_violation(g) is None


def crossing_edges(g: Graph, edges: Iterable[EdgeId], shore: Iterable[Vertex]) -> frozenset[EdgeId]:
    """Members of ``edges`` with exactly one end in ``shore``."""
    shore = frozenset(shore)
    out = set()
    for eid in edges:
        a, b = g.endpoints(eid)
        if (a in shore) != (b in shore):
            out.add(eid)
    return frozenset(out)
