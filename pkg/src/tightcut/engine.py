"""Constructive tight-cut witness.

Given a brick and a shore with 1 < |shore| < n - 1, produce a perfect
matching with at least two edges in the cut. The construction follows a
fixed case analysis; every intermediate object (paths, ears, arcs, the
final circuit) is checked as it is built, and a failed check raises
ProofClaimError instead of being papered over.

Naming inside: ``gh``/``mh``/``sh`` are the brick, its matching and the
shore; ``g``/``m``/``s`` are the same after deleting the unique matched
crossing edge uv (u on the shore side).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .altpaths import AltPath, Ear, Kind, classify, concat, ear_split, is_ear, iter_ears, \
    saturated_path, switch_circuit, symmetric_difference_component
from .canonical import CanonicalDecomposition, decompose, tpath_construct
from .errors import NotABrickError, PreconditionError, ProofClaimError
from .graph import Graph, connected_components, cut, delete_vertices, induced_subgraph, neighborhood
from .matching import allowed_edges, crossing_edges, find_perfect_matching, is_brick, is_perfect, \
    mate_map, perfect_matching_containing
from .towers import arc_from_adjacency, arc_from_sequence, border_ports, sequence_between, \
    spanning_arc_through, _adjacency


@dataclass(frozen=True)
class CutWitness:
    shore: frozenset
    input_matching: frozenset
    circuit: tuple | None
    output_matching: frozenset
    crossing: int
    trace: tuple[str, ...] = field(default=())


@functools.lru_cache(maxsize=256)
def _brick(g: Graph) -> bool:
    return is_brick(g)


def fat_witness(gh: Graph, shore, mh=None, *, prefer_proper_ears: bool = True) -> CutWitness:
    """A perfect matching of the brick gh with at least two edges crossing the shore.

    ``prefer_proper_ears`` picks a proper ear for each minimal component when
    one exists; switching it off takes the first ear found, which exercises
    the one-point-circuit branches of the construction.
    """
    sh = frozenset(shore)
    if not sh <= gh.vertices:
        raise PreconditionError("shore contains unknown vertices")
    if not 1 < len(sh) < len(gh) - 1:
        raise PreconditionError(f"shore size must lie strictly between 1 and {len(gh) - 1}")
    if not _brick(gh):
        raise NotABrickError("graph is not a brick")
    if mh is None:
        mh = find_perfect_matching(gh)
    mh = frozenset(mh)
    if not is_perfect(gh, mh):
        raise PreconditionError("starting matching is not a perfect matching")

    crossing = crossing_edges(gh, mh, sh)
    if len(crossing) >= 2:
        return CutWitness(sh, mh, None, mh, len(crossing), ("already-fat",))
    try:
        if not crossing:
            circuit, trace = _zero_crossing(gh, sh, mh)
        else:
            circuit, trace = _one_crossing(gh, sh, mh, next(iter(crossing)), prefer_proper_ears)
    except PreconditionError as exc:
        raise ProofClaimError(f"internal construction step failed: {exc}") from exc
    out = switch_circuit(gh, mh, circuit)
    count = len(crossing_edges(gh, out, sh))
    if not is_perfect(gh, out) or count < 2:
        raise ProofClaimError(f"switched matching has {count} crossing edges")
    return CutWitness(sh, mh, tuple(circuit), out, count, tuple(trace))


def _zero_crossing(gh, sh, mh):
    # no matched edge crosses, so |sh| is even and any perfect matching through
    # a crossing edge has an even, positive number of crossing edges
    e = min(cut(gh, sh))
    other = perfect_matching_containing(gh, e, mh)
    if other is None:
        raise ProofClaimError(f"edge {e} of a brick is not allowed")
    a, _ = gh.endpoints(e)
    circuit = symmetric_difference_component(gh, mh, other, a)
    return circuit, ["zero-crossing"]


def _one_crossing(gh, sh, mh, uv, prefer_proper=True):
    u, v = gh.endpoints(uv)
    if u not in sh:
        u, v = v, u
    g = delete_vertices(gh, {u, v})
    m = mh - {uv}
    s = sh - {u}
    d = decompose(g)
    if not d.is_separating(s):
        e = min(allowed_edges(g, m) & cut(g, s))
        other = perfect_matching_containing(g, e, m)
        a, _ = g.endpoints(e)
        return symmetric_difference_component(g, m, other, a), ["non-separating"]
    trace = []
    bports = border_ports(d)
    if not any(d.components[h] <= s for h in bports):
        s = g.vertices - s
        u, v = v, u
        trace.append("swapped-shore")
    if any(d.components[h] <= g.vertices - s for h in d.minimal()):
        circuit, label = case_mixed(gh, g, s, u, v, m, d)
    else:
        circuit, label = case_contained(gh, g, s, u, v, m, d, prefer_proper)
    trace.append(label)
    if not _has_edge(circuit, u, v):
        raise ProofClaimError("closing circuit does not use the matched crossing edge")
    return circuit, trace


def _has_edge(seq, a, b) -> bool:
    n = len(seq)
    return any({seq[i], seq[(i + 1) % n]} == {a, b} for i in range(n))


def _check_circuit(gh, mh, circuit, where):
    try:
        kind = classify(circuit, gh, mh, closed=True).kind
    except PreconditionError as exc:
        raise ProofClaimError(f"{where}: closed walk is not a circuit ({exc})") from exc
    if kind is not Kind.ALTERNATING_CIRCUIT:
        raise ProofClaimError(f"{where}: circuit {circuit} is not alternating")


# -- a minimal component outside the shore ---------------------------------

def case_mixed(gh: Graph, g: Graph, s, u, v, m, d: CanonicalDecomposition):
    """Circuit through uv when some minimal component of g lies outside s."""
    s = frozenset(s)
    sbar = g.vertices - s
    bports = border_ports(d)
    inside = [h for h in sorted(bports) if d.components[h] <= s]
    outside = [h for h in sorted(bports) if d.components[h] <= sbar]
    stranded = [h for h in d.minimal() if d.components[h] <= sbar]
    if not inside or not stranded:
        raise PreconditionError("needs a border inside s and a minimal component outside")
    if outside:
        seq = sequence_between(d, inside, outside)
        if seq is None:
            raise ProofClaimError("no tower-sequence between borders on the two sides")
        arc = arc_from_sequence(g, m, d, seq)
        label = "mixed/halfopen"
    else:
        arc = spanning_arc_through(g, m, d, stranded[0])
        label = "mixed/surrounded"
    return arc_to_circuit(gh, g, s, u, v, m, d, arc), label


def arc_to_circuit(gh, g, s, u, v, m, d: CanonicalDecomposition, arc):
    """Close a spanning arc crossing s into an alternating circuit of gh through uv."""
    seq = arc.vertices
    h1, h2 = arc.components
    if not d.components[h1] <= s:
        seq, (h1, h2) = seq[::-1], (h2, h1)
    if not d.components[h1] <= s:
        raise PreconditionError("arc has no end inside s")
    if not any((a in s) != (b in s) for a, b in zip(seq, seq[1:])):
        raise ProofClaimError(f"spanning arc {seq} does not cross s")
    s1, s2 = seq[0], seq[-1]
    c1, c2 = d.class_of[s1], d.class_of[s2]
    coup1, coup2 = d.up_sets(h1, c1)[2], d.up_sets(h2, c2)[2]
    t1s = sorted(set(gh.neighbors(v)) & coup1)
    t2s = sorted(set(gh.neighbors(u)) & coup2)
    if not t1s or not t2s:
        raise ProofClaimError("border port has no co-up neighbor of the crossing edge")
    mh = m | {gh.edge_between(u, v)}
    q1 = tpath_construct(g, m, d, h1, "iii", s1, t1s[0])
    q2 = tpath_construct(g, m, d, h2, "iii", s2, t2s[0])
    circuit = q1.vertices + (v, u) + q2.vertices[::-1] + seq[::-1][1:-1]
    _check_circuit(gh, mh, circuit, "arc closing")
    return circuit


# -- every minimal component inside the shore ------------------------------

def compute_S0(g: Graph, d: CanonicalDecomposition, s) -> frozenset:
    """Union of the components all of whose lower bounds lie inside s."""
    s = frozenset(s)
    if any(not d.components[h] <= s for h in d.minimal()):
        raise PreconditionError("some minimal component is not inside s")
    out = set()
    for h in d.ids:
        if all(d.components[i] <= s for i in d.ids if d.leq(i, h)):
            out |= d.components[h]
    return frozenset(out)


@dataclass(frozen=True)
class _Inner:
    """The chosen component C of g - S0 with its own decomposition."""
    vertices: frozenset
    graph: Graph
    matching: frozenset
    decomp: CanonicalDecomposition


def _inner(g, m, s0) -> _Inner:
    comps = connected_components(g, g.vertices - s0)
    if not comps:
        raise ProofClaimError("S0 covers the whole graph")
    c = comps[0]
    cg = induced_subgraph(g, c)
    mc = frozenset(e for e in m if all(x in c for x in g.endpoints(e)))
    return _Inner(c, cg, mc, decompose(cg))


def ear_for_min_component(g: Graph, m, d: CanonicalDecomposition, s0, c: _Inner, h: int,
                          prefer_proper: bool = True) -> Ear:
    """An M-ear relative to s0 passing through the minimal component h of C (an id of c.decomp)."""
    s0 = frozenset(s0)
    hv = c.decomp.components[h]
    hg = d.component_of[min(hv)]
    if d.components[hg] != hv:
        raise ProofClaimError("component of C is not a component of g")
    lower = [i for i in d.ids if i != hg and d.leq(i, hg)]
    immediate = [i for i in lower if not any(j != i and d.leq(i, j) for j in lower)]
    if not immediate:
        raise ProofClaimError(f"component {sorted(hv)} has no lower bound in g")
    for i in immediate:
        if not d.components[i] <= s0:
            raise ProofClaimError(f"immediate lower bound {sorted(d.components[i])} is not inside S0")
    fallback = None
    for i in immediate:
        for ear in iter_ears(g, m, d.components[i], through=hv):
            for piece in ear_split(g, m, ear.vertices, s0, closed=not ear.proper):
                if not piece.traverses(hv):
                    continue
                if piece.proper or not prefer_proper:
                    return piece
                if fallback is None:
                    fallback = piece
        if fallback is not None:
            return fallback
    raise ProofClaimError(f"no ear relative to a lower bound passes through {sorted(hv)}")


def balanced_to_ear_end(g: Graph, m, c: _Inner, h: int, y, ear: Ear) -> tuple[AltPath, object]:
    """A balanced path from y to an end of the ear, all other vertices inside C."""
    dc = c.decomp
    star = dc.vupstar(h)
    if y not in star:
        raise PreconditionError("y must lie in the tower over h")
    seq = ear.vertices
    forward = list(seq)
    backward = list(seq[::-1]) if ear.proper else [seq[0]] + list(seq[1:][::-1])
    r1 = _until(forward, star)
    r2 = _until(backward, star)
    z1, z2 = r1[-1], r2[-1]
    t1, t2 = dc.class_above(h, z1), dc.class_above(h, z2)
    if t1 == t2:
        raise ProofClaimError("ear enters the tower through a single class on both sides")
    middle = forward[len(r1) - 1: len(forward) - len(r2) + 1] if ear.proper else None
    if middle is not None and not set(middle) <= star:
        raise ProofClaimError("ear leaves the tower between its entry points")
    t3 = dc.class_above(h, y)
    r, z = (r1, z1) if t1 != t3 else (r2, z2)
    low = tpath_construct(c.graph, c.matching, dc, h, "iv", y, z)
    path = concat(low.vertices, r[::-1])
    try:
        kind = classify(path, g, m)
    except PreconditionError as exc:
        raise ProofClaimError(f"path to the ear end repeats a vertex: {exc}") from exc
    if kind.kind is not Kind.BALANCED or (kind.source, kind.target) != (y, r[0]):
        raise ProofClaimError(f"path {path} is not balanced from {y} to {r[0]}")
    if not set(path[:-1]) <= c.vertices:
        raise ProofClaimError("path to the ear end leaves C")
    return AltPath(path, Kind.BALANCED), r[0]


def _until(seq, target):
    for i, x in enumerate(seq):
        if x in target:
            return seq[: i + 1]
    raise ProofClaimError("ear does not enter the tower")


def case_contained(gh: Graph, g: Graph, s, u, v, m, d: CanonicalDecomposition, prefer_proper: bool = True):
    """Circuit through uv when every minimal component of g lies inside s."""
    s = frozenset(s)
    s0 = compute_S0(g, d, s)
    c = _inner(g, m, s0)
    mh = m | {gh.edge_between(u, v)}
    mins = c.decomp.minimal()
    ears = {h: ear_for_min_component(g, m, d, s0, c, h, prefer_proper) for h in mins}
    attach = neighborhood(g, c.vertices) & s0

    if len(attach) == 1:
        (x0,) = attach
        return _cut_vertex(gh, g, m, mh, s0, c, ears, u, v, x0), "contained/cut-vertex"
    for h in mins:
        if ears[h].proper:
            return proper_to_circuit(gh, mh, u, v, ears[h]), "contained/proper-ear"
    for h in mins:
        x_h = ears[h].ends[0]
        star = c.decomp.vupstar(h)
        extra = sorted((neighborhood(g, star) & s0) - {x_h})
        if extra:
            z = extra[0]
            y = min(w for w in g.neighbors(z) if w in star)
            q, end = balanced_to_ear_end(g, m, c, h, y, ears[h])
            ear = _as_proper_ear(g, m, s0, (z,) + q.vertices)
            return proper_to_circuit(gh, mh, u, v, ear), "contained/multiNei"
    ear = _two_tower_ear(g, m, s0, c, ears)
    return proper_to_circuit(gh, mh, u, v, ear), "contained/multi2ear"


def _as_proper_ear(g, m, s0, seq) -> Ear:
    if len(set(seq)) != len(seq) or not is_ear(seq, g, m, s0, proper=True):
        raise ProofClaimError(f"{seq} is not a proper ear relative to S0")
    return Ear(tuple(seq), True, frozenset(s0))


def _cut_vertex(gh, g, m, mh, s0, c: _Inner, ears, u, v, x0):
    path = saturated_path(gh, mh, x0, u)
    if path is None:
        raise ProofClaimError("brick has no saturated path between a vertex and u")
    seq = path.vertices
    if seq[-2:] != (v, u):
        raise ProofClaimError("saturated path to u does not arrive through v")
    r = seq[:-2]
    if set(r) & c.vertices:
        raise ProofClaimError("trimmed saturated path enters C")
    ys = sorted(set(gh.neighbors(u)) & c.vertices)
    if not ys:
        raise ProofClaimError("u has no neighbor in C")
    y = ys[0]
    dc = c.decomp
    h = next((h for h in dc.minimal() if y in dc.vupstar(h)), None)
    if h is None:
        raise ProofClaimError(f"vertex {y} lies over no minimal component of C")
    q, end = balanced_to_ear_end(g, m, c, h, y, ears[h])
    if end != x0:
        raise ProofClaimError("ear end differs from the cut vertex")
    circuit = r + (v, u) + q.vertices[:-1]
    _check_circuit(gh, mh, circuit, "cut-vertex closing")
    return circuit


def proper_to_circuit(gh, mh, u, v, ear: Ear):
    """Close a proper ear relative to S0 with a saturated path of the brick between its ends."""
    x, y = ear.ends
    q = saturated_path(gh, mh, x, y)
    if q is None:
        raise ProofClaimError("brick has no saturated path between the ear ends")
    if not _has_edge(q.vertices, u, v) or {q.vertices[0], q.vertices[-1]} & {u, v}:
        raise ProofClaimError("saturated path between the ear ends avoids uv")
    if set(q.vertices[1:-1]) & set(ear.vertices):
        raise ProofClaimError("saturated path meets the ear internally")
    circuit = ear.vertices + q.vertices[::-1][1:-1]
    _check_circuit(gh, mh, circuit, "proper ear closing")
    return circuit


def _two_tower_ear(g, m, s0, c: _Inner, ears) -> Ear:
    dc = c.decomp
    mins = set(dc.minimal())
    adj = _adjacency(dc)
    for h1 in sorted(mins):
        for p1, h2, p2 in adj[h1]:
            if h2 not in mins or ears[h1].ends[0] == ears[h2].ends[0]:
                continue
            arc = arc_from_adjacency(c.graph, c.matching, dc, h1, p1, h2, p2)
            s1, s2 = arc.vertices[0], arc.vertices[-1]
            q1, _ = balanced_to_ear_end(g, m, c, h1, s1, ears[h1])
            q2, _ = balanced_to_ear_end(g, m, c, h2, s2, ears[h2])
            for q in (q1, q2):
                if len(set(q.vertices) & set(arc.vertices)) != 1:
                    raise ProofClaimError("path to an ear end meets the arc")
            if set(q1.vertices) & set(q2.vertices):
                raise ProofClaimError("paths to the two ear ends intersect")
            return _as_proper_ear(g, m, s0, concat(q1.vertices[::-1], arc.vertices, q2.vertices))
    raise ProofClaimError("no t-adjacent minimal towers of C with distinct ear ends")
