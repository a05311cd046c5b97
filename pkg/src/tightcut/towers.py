"""Towers over factor-components, t-adjacency, borders and arc constructions.

A tower over H is the subgraph induced by vupstar(H). Two towers over
incomparable components are t-adjacent through a pair of port classes
(S1, S2) when vup(S1) and vup(S2) meet or some edge joins vupstar(S1) and
vupstar(S2). Tower-sequences chain such adjacencies with the entry and exit
ports of each inner element differing; arcs are built along them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .altpaths import AltPath, Arc, Kind, classify, concat
from .canonical import CanonicalDecomposition, tpath_construct
from .errors import PreconditionError, ProofClaimError
from .graph import Graph, edges_between


@dataclass(frozen=True)
class Tower:
    base: int
    vertices: frozenset


@dataclass(frozen=True)
class TowerSequence:
    """Bases H_1..H_k with ports (S_i^-, S_i^+) per element.

    S_1^- and S_k^+ are not constrained by any adjacency; they only keep the
    two ports of an element distinct and may be replaced when the sequence
    is extended at that end.
    """
    bases: tuple[int, ...]
    ports: tuple[tuple[frozenset, frozenset], ...]

    def __len__(self):
        return len(self.bases)


def tower(d: CanonicalDecomposition, h: int) -> Tower:
    return Tower(h, d.vupstar(h))


def comparable(d: CanonicalDecomposition, a: int, b: int) -> bool:
    return d.leq(a, b) or d.leq(b, a)


def ports_adjacent(d: CanonicalDecomposition, h1: int, s1, h2: int, s2) -> bool:
    """Whether classes s1 of h1 and s2 of h2 jointly witness t-adjacency."""
    if h1 == h2 or comparable(d, h1, h2):
        return False
    star1, up1, _ = d.up_sets(h1, s1)
    star2, up2, _ = d.up_sets(h2, s2)
    if up1 & up2:
        return True
    return bool(edges_between(d.graph, star1, star2))


def _adjacency(d: CanonicalDecomposition) -> dict[int, list[tuple[frozenset, int, frozenset]]]:
    cached = getattr(d, "_adjacency_cache", None)
    if cached is not None:
        return cached
    out: dict[int, list] = {h: [] for h in d.ids}
    for h1 in d.ids:
        for h2 in d.ids:
            if h1 == h2 or comparable(d, h1, h2):
                continue
            for s1 in d.classes[h1]:
                for s2 in d.classes[h2]:
                    if ports_adjacent(d, h1, s1, h2, s2):
                        out[h1].append((s1, h2, s2))
    d._adjacency_cache = out
    return out


def t_adjacency(g: Graph, d: CanonicalDecomposition) -> set[tuple[int, frozenset, int, frozenset]]:
    """All (H1, S1, H2, S2) with H1 < H2 whose towers are t-adjacent through ports S1, S2."""
    return {(h1, s1, h2, s2) for h1, lst in _adjacency(d).items() for s1, h2, s2 in lst if h1 < h2}


def outward_classes(d: CanonicalDecomposition, h: int) -> list[frozenset]:
    """Classes S of h with an edge from vupstar(S) to a vertex outside vupstar(h)."""
    outside = d.graph.vertices - d.vupstar(h)
    return [s for s in d.classes[h] if edges_between(d.graph, d.up_sets(h, s)[0], outside)]


def borders(g: Graph, d: CanonicalDecomposition) -> set[tuple[int, frozenset | None]]:
    """Minimal components with at most one outward class, paired with that class (or None)."""
    out = set()
    for h in d.minimal():
        outward = outward_classes(d, h)
        if len(outward) <= 1:
            out.add((h, outward[0] if outward else None))
    return out


def border_ports(d: CanonicalDecomposition) -> dict[int, frozenset | None]:
    return dict(borders(d.graph, d))


def _joining_edge(d: CanonicalDecomposition, star1, star2):
    g = d.graph
    for u in sorted(star1):
        for w in g.neighbors(u):
            if w in star2 and w not in star1:
                return u, w
    return None


def arc_from_adjacency(g: Graph, m, d: CanonicalDecomposition, h1: int, s1, h2: int, s2) -> Arc:
    """An M-arc from a vertex of s1 to a vertex of s2, inner vertices in vup(s1) | vup(s2)."""
    s1, s2 = frozenset(s1), frozenset(s2)
    if not ports_adjacent(d, h1, s1, h2, s2):
        raise PreconditionError("towers are not t-adjacent through the given ports")
    m = frozenset(m)
    star1, up1, coup1 = d.up_sets(h1, s1)
    star2, up2, coup2 = d.up_sets(h2, s2)
    edge = _joining_edge(d, star1, star2)
    if edge is None:
        back = _joining_edge(d, star2, star1)
        if back is None:
            raise ProofClaimError("t-adjacent ports are not joined by an edge")
        arc = _arc_through_edge(g, m, d, h2, s2, h1, s1, back)
        return Arc(arc.path.reversed(), (h1, h2))
    return _arc_through_edge(g, m, d, h1, s1, h2, s2, edge)


def _arc_through_edge(g, m, d, h1, s1, h2, s2, edge) -> Arc:
    u, v = edge
    p1 = tpath_construct(g, m, d, h1, "i", u)
    p2 = tpath_construct(g, m, d, h2, "i", v)
    if set(p1.vertices) & set(p2.vertices):
        raise ProofClaimError(f"balanced paths {p1.vertices} and {p2.vertices} intersect")
    seq = concat(p1.vertices[::-1], p2.vertices)
    arc = Arc(AltPath(seq, Kind.EXPOSED), (h1, h2))
    _check_arc(g, m, d, arc, s1, s2)
    inner = set(seq[1:-1])
    if not inner <= d.up_sets(h1, s1)[1] | d.up_sets(h2, s2)[1]:
        raise ProofClaimError(f"arc {seq} leaves vup of its port classes")
    return arc


def _check_arc(g, m, d: CanonicalDecomposition, arc: Arc, s1, s2):
    seq = arc.vertices
    h1, h2 = arc.components
    if classify(seq, g, m).kind is not Kind.EXPOSED:
        raise ProofClaimError(f"arc {seq} is not M-exposed")
    if seq[0] not in s1 or seq[-1] not in s2:
        raise ProofClaimError(f"arc {seq} does not end in its port classes")
    inner = set(seq[1:-1])
    if inner & (d.components[h1] | d.components[h2]):
        raise ProofClaimError(f"arc {seq} meets its end components internally")
    avoid = d.up_sets(h1, s1)[2] | d.up_sets(h2, s2)[2]
    if set(seq) & avoid:
        raise ProofClaimError(f"arc {seq} meets vcoup of an end class")


def validate_sequence(d: CanonicalDecomposition, seq: TowerSequence):
    if len(seq.bases) != len(seq.ports) or not seq.bases:
        raise PreconditionError("tower-sequence needs one port pair per base")
    for h, (lo, hi) in zip(seq.bases, seq.ports):
        if h not in d.ids or lo not in d.classes[h] or hi not in d.classes[h]:
            raise PreconditionError(f"ports of component {h} are not classes of it")
        if lo == hi:
            raise PreconditionError(f"entry and exit ports of component {h} coincide")
    for i in range(len(seq.bases) - 1):
        if not ports_adjacent(d, seq.bases[i], seq.ports[i][1], seq.bases[i + 1], seq.ports[i + 1][0]):
            raise PreconditionError(f"elements {i} and {i + 1} are not t-adjacent through their ports")


def arc_from_sequence(g: Graph, m, d: CanonicalDecomposition, seq: TowerSequence) -> Arc:
    """An M-arc from S_1^+ to S_k^-, passing through every inner base of the sequence."""
    validate_sequence(d, seq)
    k = len(seq)
    if k < 2:
        raise PreconditionError("an arc needs a sequence of length at least two")
    minimal = set(d.minimal())
    if not set(seq.bases) <= minimal:
        raise PreconditionError("sequence bases must be minimal components")
    if len(set(seq.bases)) != k:
        raise ProofClaimError("tower-sequence repeats a base")
    m = frozenset(m)
    b, p = seq.bases, seq.ports
    arc = arc_from_adjacency(g, m, d, b[0], p[0][1], b[1], p[1][0])
    for j in range(2, k):
        mid = b[j - 1]
        nxt = arc_from_adjacency(g, m, d, mid, p[j - 1][1], b[j], p[j][0])
        t_hat = arc.vertices[-1]
        q = tpath_construct(g, m, d, mid, "ii", t_hat, nxt.vertices[0])
        q_hat = concat(q.vertices, nxt.vertices)
        if set(arc.vertices) & set(q_hat) != {t_hat}:
            raise ProofClaimError(f"extension {q_hat} meets the arc {arc.vertices} beyond its end")
        arc = Arc(AltPath(concat(arc.vertices, q_hat), Kind.EXPOSED), (b[0], b[j]))
    _check_arc(g, m, d, arc, p[0][1], p[-1][0])
    for h in b[1:-1]:
        if not set(arc.vertices) & d.components[h]:
            raise ProofClaimError(f"arc does not pass through component {h}")
    return arc


def _other_class(d, h, avoid):
    for s in d.classes[h]:
        if s != avoid:
            return s
    raise PreconditionError(f"component {h} has a single class")


def single(d: CanonicalDecomposition, h: int) -> TowerSequence:
    """The one-element sequence (h) with placeholder ports."""
    first = d.classes[h][0]
    return TowerSequence((h,), ((first, _other_class(d, h, first)),))


def _step_options(d, h, forbidden):
    """(exit class, next base, entry class) moves from h to another minimal tower."""
    minimal = set(d.minimal())
    for s, h2, s2 in _adjacency(d)[h]:
        if h2 in minimal and s != forbidden:
            yield s, h2, s2


def _append(d, seq: TowerSequence, move) -> TowerSequence:
    s, h2, s2 = move
    ports = list(seq.ports)
    lo, _ = ports[-1]
    if len(seq) == 1 and lo == s:
        lo = _other_class(d, seq.bases[-1], s)
    ports[-1] = (lo, s)
    ports.append((s2, _other_class(d, h2, s2)))
    return TowerSequence(seq.bases + (h2,), tuple(ports))


def _prepend(d, seq: TowerSequence, move) -> TowerSequence:
    s, h0, s0 = move
    ports = list(seq.ports)
    _, hi = ports[0]
    if len(seq) == 1 and hi == s:
        hi = _other_class(d, seq.bases[0], s)
    ports[0] = (s, hi)
    ports.insert(0, (_other_class(d, h0, s0), s0))
    return TowerSequence((h0,) + seq.bases, tuple(ports))


def is_spanning(d: CanonicalDecomposition, seq: TowerSequence) -> bool:
    ports = border_ports(d)
    return seq.bases[0] in ports and seq.bases[-1] in ports


def extend_to_spanning_sequence(g: Graph, m, d: CanonicalDecomposition, seq: TowerSequence) -> TowerSequence:
    """Grow seq at whichever end is not a border until both ends are borders."""
    validate_sequence(d, seq)
    ports = border_ports(d)
    for _ in range(len(d.components) + 1):
        first, last = seq.bases[0], seq.bases[-1]
        if last not in ports:
            forbidden = seq.ports[-1][0] if len(seq) > 1 else None
            move = next(_step_options(d, last, forbidden), None)
            if move is None:
                raise ProofClaimError(f"non-border component {last} has no free port to extend through")
            seq = _append(d, seq, move)
        elif first not in ports:
            forbidden = seq.ports[0][1] if len(seq) > 1 else None
            move = next(_step_options(d, first, forbidden), None)
            if move is None:
                raise ProofClaimError(f"non-border component {first} has no free port to extend through")
            seq = _prepend(d, seq, move)
        else:
            break
        if len(set(seq.bases)) != len(seq.bases):
            raise ProofClaimError(f"tower-sequence {seq.bases} repeats a base")
    else:
        raise ProofClaimError("sequence extension did not terminate")
    validate_sequence(d, seq)
    return seq


def spanning_sequence_through(g: Graph, m, d: CanonicalDecomposition, h: int) -> TowerSequence:
    """A spanning tower-sequence of length at least two containing h."""
    if h not in d.minimal():
        raise PreconditionError(f"component {h} is not minimal")
    seq = single(d, h)
    ports = border_ports(d)
    if h in ports:
        move = next(_step_options(d, h, None), None)
        if move is None:
            raise PreconditionError(f"border {h} is not t-adjacent to any other tower; no spanning arc exists")
        seq = _append(d, seq, move)
    return extend_to_spanning_sequence(g, m, d, seq)


def spanning_arc_through(g: Graph, m, d: CanonicalDecomposition, h: int) -> Arc:
    """A spanning M-arc that meets V(h) (as an end or as an inner component)."""
    seq = spanning_sequence_through(g, m, d, h)
    arc = arc_from_sequence(g, m, d, seq)
    if not set(arc.vertices) & d.components[h]:
        raise ProofClaimError(f"spanning arc misses component {h}")
    return arc


def sequence_between(d: CanonicalDecomposition, sources, targets) -> TowerSequence | None:
    """Shortest tower-sequence over minimal components from a source base to a target base.

    Breadth-first search over states (base, entry class); a move leaves
    through a port other than the entry class.
    """
    sources, targets = list(sources), set(targets)
    start = [(h, None) for h in sorted(sources)]
    parent = {st: None for st in start}
    queue = deque(start)
    while queue:
        state = queue.popleft()
        h, entry = state
        if h in targets and parent[state] is not None:
            return _rebuild(d, parent, state)
        for s, h2, s2 in _step_options(d, h, entry):
            nxt = (h2, s2)
            if nxt not in parent:
                parent[nxt] = (state, s)
                queue.append(nxt)
    return None


def _rebuild(d, parent, state) -> TowerSequence:
    chain = []
    while parent[state] is not None:
        prev, exit_port = parent[state]
        chain.append((state, exit_port))
        state = prev
    chain.reverse()
    bases = [state[0]]
    entries = [None]
    exits = []
    for (h, entry), exit_port in chain:
        exits.append(exit_port)
        bases.append(h)
        entries.append(entry)
    exits.append(None)
    ports = []
    for h, lo, hi in zip(bases, entries, exits):
        if lo is None:
            lo = _other_class(d, h, hi)
        if hi is None:
            hi = _other_class(d, h, lo)
        ports.append((lo, hi))
    if len(set(bases)) != len(bases):
        raise ProofClaimError(f"tower-sequence {bases} repeats a base")
    seq = TowerSequence(tuple(bases), tuple(ports))
    validate_sequence(d, seq)
    return seq
