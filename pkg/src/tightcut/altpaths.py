"""Alternating paths, circuits, ears and arcs relative to a matching.

Paths and circuits are vertex sequences. A circuit is written without
repeating its first vertex; the closing edge is implied. Whether a step
``a -> b`` is a matching edge is decided by the matching alone, so the
vertex sequence is enough even in multigraphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError, ProofClaimError
from .graph import EdgeId, Graph, Vertex
from .matching import is_perfect, mate_map, perfect_matching_avoiding


class Kind(enum.Enum):
    TRIVIAL = "trivial"
    SATURATED = "saturated"
    EXPOSED = "exposed"
    BALANCED = "balanced"
    ALTERNATING_CIRCUIT = "alternating-circuit"
    NONE = "none"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    source: Vertex | None = None  # balanced: the end whose path edge is matched
    target: Vertex | None = None  # balanced: the end left uncovered within the path

    def __str__(self):
        if self.kind is Kind.BALANCED:
            return f"balanced({self.source}->{self.target})"
        return self.kind.value


@dataclass(frozen=True)
class AltPath:
    vertices: tuple[Vertex, ...]
    kind: Kind

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def reversed(self) -> "AltPath":
        return AltPath(self.vertices[::-1], self.kind)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class Ear:
    """An M-ear relative to ``anchors``.

    ``proper`` ears are exposed paths whose two ends lie in ``anchors``;
    otherwise ``vertices`` is a circuit meeting ``anchors`` only in its first
    vertex, and removing that vertex leaves a saturated path.
    """
    vertices: tuple[Vertex, ...]
    proper: bool
    anchors: frozenset[Vertex]

    @property
    def ends(self) -> tuple[Vertex, ...]:
        if self.proper:
            return (self.vertices[0], self.vertices[-1])
        return (self.vertices[0],)

    @property
    def interior(self) -> tuple[Vertex, ...]:
        return self.vertices[1:-1] if self.proper else self.vertices[1:]

    @property
    def trivial(self) -> bool:
        return self.proper and len(self.vertices) == 2

    def traverses(self, y: Iterable[Vertex]) -> bool:
        y = set(y)
        return any(v in y for v in self.interior)


@dataclass(frozen=True)
class Arc:
    """An M-exposed path between two factor-components, touching them only at its ends."""
    path: AltPath
    components: tuple[int, int]

    @property
    def vertices(self):
        return self.path.vertices


def _is_matched(mate: dict, a: Vertex, b: Vertex) -> bool:
    return mate.get(a) == b


def _check_walk(g: Graph, seq: Sequence[Vertex], closed: bool):
    if len(set(seq)) != len(seq):
        raise PreconditionError("vertex sequence repeats a vertex")
    for v in seq:
        if v not in g:
            raise PreconditionError(f"vertex {v} is not in the graph")
    steps = list(zip(seq, seq[1:]))
    if closed:
        if len(seq) < 3:
            raise PreconditionError("a circuit needs at least three vertices")
        steps.append((seq[-1], seq[0]))
    for a, b in steps:
        if g.edge_between(a, b) is None:
            raise PreconditionError(f"{a} and {b} are not adjacent")
    return steps


def classify(p: Sequence[Vertex], g: Graph, m: Iterable[EdgeId], closed: bool = False) -> Classification:
    """Exact alternating kind of a path (or, with ``closed``, a circuit)."""
    seq = tuple(p)
    if not seq:
        raise PreconditionError("empty vertex sequence")
    steps = _check_walk(g, seq, closed)
    mate = mate_map(g, m)
    flags = [_is_matched(mate, a, b) for a, b in steps]
    if closed:
        n = len(flags)
        if n % 2 == 0 and all(flags[i] != flags[(i + 1) % n] for i in range(n)):
            return Classification(Kind.ALTERNATING_CIRCUIT)
        return Classification(Kind.NONE)
    if not flags:
        return Classification(Kind.TRIVIAL, seq[0], seq[0])
    if any(flags[i] == flags[i + 1] for i in range(len(flags) - 1)):
        return Classification(Kind.NONE)
    first, last = flags[0], flags[-1]
    if first and last:
        return Classification(Kind.SATURATED)
    if not first and not last:
        return Classification(Kind.EXPOSED)
    if first:
        return Classification(Kind.BALANCED, seq[0], seq[-1])
    return Classification(Kind.BALANCED, seq[-1], seq[0])


def is_ear(seq: Sequence[Vertex], g: Graph, m: Iterable[EdgeId], anchors: Iterable[Vertex],
           proper: bool | None = None) -> bool:
    """Whether ``seq`` is an M-ear relative to ``anchors`` (proper path or circuit form)."""
    anchors = frozenset(anchors)
    seq = tuple(seq)
    if not seq:
        return False
    if proper is None:
        proper = seq[-1] in anchors and len(seq) >= 2
    try:
        if proper:
            if len(seq) < 2 or seq[0] not in anchors or seq[-1] not in anchors:
                return False
            if any(v in anchors for v in seq[1:-1]):
                return False
            return classify(seq, g, m).kind is Kind.EXPOSED
        if len(seq) < 3 or seq[0] not in anchors or any(v in anchors for v in seq[1:]):
            return False
        _check_walk(g, seq, closed=True)
        return classify(seq[1:], g, m).kind is Kind.SATURATED
    except PreconditionError:
        return False


def path_edges(g: Graph, m: Iterable[EdgeId], seq: Sequence[Vertex], closed: bool = False) -> list[EdgeId]:
    """Edge ids along ``seq``: the matching edge where the step is matched, else the least id."""
    mate = mate_map(g, m)
    m = frozenset(m)
    steps = list(zip(seq, seq[1:]))
    if closed:
        steps.append((seq[-1], seq[0]))
    out = []
    for a, b in steps:
        if _is_matched(mate, a, b):
            out.append(next(e for w, e in g.incident(a) if w == b and e in m))
        else:
            out.append(g.edge_between(a, b))
    return out


def switch_circuit(g: Graph, m: Iterable[EdgeId], c: Sequence[Vertex]) -> frozenset[EdgeId]:
    """M xor E(C) for an M-alternating circuit C."""
    m = frozenset(m)
    if classify(c, g, m, closed=True).kind is not Kind.ALTERNATING_CIRCUIT:
        raise PreconditionError("circuit is not M-alternating")
    return m.symmetric_difference(path_edges(g, m, c, closed=True))


def _restricted(g: Graph, m: Iterable[EdgeId], confined: frozenset) -> frozenset[EdgeId]:
    return frozenset(e for e in m if g.endpoints(e)[0] in confined and g.endpoints(e)[1] in confined)


def symmetric_difference_component(g: Graph, m1, m2, start: Vertex) -> list[Vertex]:
    """The vertex sequence of the component of m1 xor m2 through ``start``.

    For a path component ``start`` must be one of its ends; for a circuit the
    sequence begins at ``start`` and follows its m1 edge first.
    """
    mate1 = mate_map(g, m1)
    mate2 = mate_map(g, m2)
    seq = [start]
    use_first = mate1.get(start) != mate2.get(start) and start in mate1
    if not use_first and not (start in mate2 and mate2.get(start) != mate1.get(start)):
        return seq
    cur = start
    while True:
        table = mate1 if use_first else mate2
        other = mate2 if use_first else mate1
        nxt = table.get(cur)
        if nxt is None or other.get(cur) == nxt:
            break
        if nxt == start:
            break
        seq.append(nxt)
        cur = nxt
        use_first = not use_first
    return seq


def saturated_path(g: Graph, m: Iterable[EdgeId], x: Vertex, y: Vertex) -> AltPath | None:
    """An M-saturated path between x and y, present iff g - x - y is factorizable.

    Built from a perfect matching m' of g - x - y: the component of m xor m'
    containing x is the path.
    """
    m = frozenset(m)
    if x == y:
        raise PreconditionError("saturated path needs distinct ends")
    if not is_perfect(g, m):
        raise PreconditionError("matching is not perfect")
    other = perfect_matching_avoiding(g, m, (x, y))
    if other is None:
        return None
    seq = symmetric_difference_component(g, m, other, x)
    if seq[-1] != y:
        raise ProofClaimError("symmetric difference component through x does not end at y")
    return AltPath(tuple(seq), Kind.SATURATED)


def balanced_path(g: Graph, m: Iterable[EdgeId], x: Vertex, y: Vertex,
                  confined: Iterable[Vertex] | None = None) -> AltPath | None:
    """An M-balanced path from x to y (y left uncovered within the path) inside ``confined``.

    The restriction of m to ``confined`` must be perfect apart from ``y``, which
    may be matched outside. Built by hanging a pendant vertex on y, matched to y,
    and searching for a saturated path from x to the pendant.
    """
    m = frozenset(m)
    conf = g.vertices if confined is None else frozenset(confined)
    if x not in conf or y not in conf:
        raise PreconditionError("path ends must lie in the confining set")
    if x == y:
        return AltPath((x,), Kind.TRIVIAL)
    inner = _restricted(g, m, conf)
    mate = mate_map(g, inner)
    if (conf - set(mate)) - {y}:
        raise PreconditionError("matching restricted to the confining set leaves vertices other than y uncovered")
    if y in mate:
        # y's partner cannot lie on a path that leaves y uncovered
        partner = mate[y]
        if partner == x:
            return None
        conf = conf - {partner}
        inner = frozenset(e for e in inner if y not in g.endpoints(e))
    pendant = max(g.vertices) + 1
    pe = max(g.edges, default=-1) + 1
    edges = {e: ab for e, ab in g.edges.items() if ab[0] in conf and ab[1] in conf}
    edges[pe] = (y, pendant)
    aux = Graph(conf | {pendant}, edges)
    path = saturated_path(aux, inner | {pe}, x, pendant)
    if path is None:
        return None
    return AltPath(path.vertices[:-1], Kind.BALANCED)


def confined_saturated_path(g: Graph, m: Iterable[EdgeId], x: Vertex, y: Vertex,
                            confined: Iterable[Vertex]) -> AltPath | None:
    """Saturated x-y path using only vertices of ``confined`` (on which m must be perfect)."""
    conf = frozenset(confined)
    if x not in conf or y not in conf:
        raise PreconditionError("path ends must lie in the confining set")
    inner = _restricted(g, m, conf)
    sub = Graph(conf, {e: ab for e, ab in g.edges.items() if ab[0] in conf and ab[1] in conf})
    if not is_perfect(sub, inner):
        raise PreconditionError("matching is not perfect on the confining set")
    return saturated_path(sub, inner, x, y)


def ear_split(g: Graph, m: Iterable[EdgeId], p: Sequence[Vertex], x: Iterable[Vertex],
              closed: bool = False) -> list[Ear]:
    """Pieces of P between consecutive visits to X, each certified as an M-ear relative to X.

    Edges inside g[X] are dropped, and P is also cut at every vertex of X it
    passes through, so a circuit ear whose anchor lies in X splits at the
    anchor as well. ``closed`` marks P as a circuit.
    """
    x = frozenset(x)
    seq = list(p)
    if closed:
        on_x = [i for i, v in enumerate(seq) if v in x]
        if not on_x:
            raise PreconditionError("circuit does not meet X")
        k = on_x[0]
        seq = seq[k:] + seq[:k] + [seq[k]]
    elif seq and (seq[0] not in x or seq[-1] not in x):
        raise PreconditionError("path ends must lie in X")
    pieces: list[list[Vertex]] = []
    cur = [seq[0]]
    for b in seq[1:]:
        cur.append(b)
        if b in x:
            if not (len(cur) == 2 and cur[0] in x):
                pieces.append(cur)
            cur = [b]
    ears = []
    for piece in pieces:
        if piece[0] == piece[-1]:
            ear = Ear(tuple(piece[:-1]), False, x)
        else:
            ear = Ear(tuple(piece), True, x)
        if not is_ear(ear.vertices, g, m, x, proper=ear.proper):
            raise PreconditionError(f"component {list(ear.vertices)} is not an M-ear relative to X")
        ears.append(ear)
    return ears


def iter_ears(g: Graph, m: Iterable[EdgeId], anchors: Iterable[Vertex],
              through: Iterable[Vertex] | None = None,
              interior: Iterable[Vertex] | None = None,
              include_trivial: bool = False) -> Iterator[Ear]:
    """Exhaustively enumerate M-ears relative to ``anchors``.

    ``through`` keeps only ears with an interior vertex in that set; ``interior``
    restricts where interior vertices may lie. Proper ears are reported once per
    direction and circuit ears once per orientation; callers dedupe if needed.
    Exponential in the worst case and meant for small graphs.
    """
    anchors = frozenset(anchors)
    through = None if through is None else frozenset(through)
    room = (g.vertices - anchors) if interior is None else (frozenset(interior) - anchors)
    mate = mate_map(g, m)

    for a in sorted(anchors):
        for w in g.neighbors(a):
            if mate.get(a) == w:
                continue
            if w in anchors:
                if include_trivial and a < w:
                    yield Ear((a, w), True, anchors)
                continue
            if w not in room:
                continue
            path = [a, w]
            on_path = {a, w}
            yield from _grow(g, mate, anchors, room, through, path, on_path)


def _grow(g, mate, anchors, room, through, path, on_path):
    last = path[-1]
    partner = mate.get(last)
    if partner is None or partner in on_path or partner not in room:
        return
    path.append(partner)
    on_path.add(partner)
    hit = through is None or any(v in through for v in path[1:])
    for z in g.neighbors(partner):
        if mate.get(partner) == z:
            continue
        if z in anchors:
            if not hit:
                continue
            if z == path[0]:
                yield Ear(tuple(path), False, anchors)
            else:
                yield Ear(tuple(path) + (z,), True, anchors)
        elif z in room and z not in on_path:
            path.append(z)
            on_path.add(z)
            yield from _grow(g, mate, anchors, room, through, path, on_path)
            on_path.discard(z)
            path.pop()
    on_path.discard(partner)
    path.pop()


def find_ear(g: Graph, m: Iterable[EdgeId], anchors: Iterable[Vertex],
             through: Iterable[Vertex] | None = None,
             interior: Iterable[Vertex] | None = None,
             prefer_proper: bool = True) -> Ear | None:
    """First non-trivial ear found by ``iter_ears``; proper ears first when preferred."""
    fallback = None
    for ear in iter_ears(g, m, anchors, through, interior):
        if ear.proper or not prefer_proper:
            return ear
        if fallback is None:
            fallback = ear
    return fallback


def concat(*parts: Sequence[Vertex]) -> tuple[Vertex, ...]:
    """Join vertex sequences whose consecutive parts share their boundary vertex."""
    out: list[Vertex] = list(parts[0])
    for part in parts[1:]:
        part = list(part)
        if out and part and out[-1] == part[0]:
            part = part[1:]
        out.extend(part)
    return tuple(out)
