"""Invariant checks that compare the library against the brute-force oracles.

Every function returns a list of human-readable violations; an empty list
means the invariant holds. Used by ``tightcut check verify-decomp`` and by
the test-suite.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .altpaths import Kind, classify, iter_ears, saturated_path
from .canonical import CanonicalDecomposition, decompose, tpath_construct
from .errors import ProofClaimError
from .graph import Graph, connected_components, neighborhood
from .matching import allowed_edges, find_perfect_matching
from .testkit import (allowed_edges_bruteforce, factor_components_bruteforce, factorizable_bruteforce,
                      leq_bruteforce)

CLAIM_PREFIX = "proof claim failed: "


def check_allowed_edges(g: Graph) -> list[str]:
    fast, slow = allowed_edges(g), allowed_edges_bruteforce(g)
    return [] if fast == slow else [f"allowed edges differ: {sorted(fast ^ slow)}"]


def check_components(g: Graph, d: CanonicalDecomposition) -> list[str]:
    slow = factor_components_bruteforce(g)
    return [] if list(d.components) == slow else ["factor-components differ from enumeration"]


def check_order(g: Graph, d: CanonicalDecomposition) -> list[str]:
    """Order agrees with the brute-force definition and satisfies the partial-order axioms."""
    out = []
    comps = list(d.components)
    for a in d.ids:
        for b in d.ids:
            if d.leq(a, b) != leq_bruteforce(g, comps[a], comps[b], comps):
                out.append(f"order disagrees with enumeration on ({a}, {b})")
    for a in d.ids:
        if not d.leq(a, a):
            out.append(f"not reflexive at {a}")
    for a, b in permutations(d.ids, 2):
        if d.leq(a, b) and d.leq(b, a):
            out.append(f"not antisymmetric on ({a}, {b})")
    for a, b, c in permutations(d.ids, 3):
        if d.leq(a, b) and d.leq(b, c) and not d.leq(a, c):
            out.append(f"not transitive on ({a}, {b}, {c})")
    return out


def check_classes(g: Graph, d: CanonicalDecomposition) -> list[str]:
    """Classes partition each component and ~ is an equivalence relation (by enumeration)."""
    out = []
    for h in d.ids:
        comp = d.components[h]
        classes = d.classes[h]
        if sorted(v for s in classes for v in s) != sorted(comp):
            out.append(f"classes of {h} do not partition it")
        where = {v: i for i, s in enumerate(classes) for v in s}
        for u, w in combinations(sorted(comp), 2):
            related = not factorizable_bruteforce(g, (u, w))
            if related != (where[u] == where[w]):
                out.append(f"~ disagrees with enumeration on ({u}, {w})")
    return out


def check_tags(g: Graph, d: CanonicalDecomposition) -> list[str]:
    """Each upper component is tagged by exactly one class; vupstar(S) partitions the tower."""
    out = []
    for h in d.ids:
        comp = d.components[h]
        for k in connected_components(g, d.vup(h)):
            nb = neighborhood(g, k) & comp
            hits = [s for s in d.classes[h] if nb and nb <= s]
            if len(hits) != 1:
                out.append(f"upper component {sorted(k)} over {h} has {len(hits)} tag classes")
        stars = [d.up_sets(h, s)[0] for s in d.classes[h]]
        if sum(len(x) for x in stars) != len(d.vupstar(h)) or frozenset().union(*stars) != d.vupstar(h):
            out.append(f"vupstar of the classes of {h} does not partition its tower")
    return out


def check_saturated_paths(g: Graph, m=None) -> list[str]:
    """saturated_path(x, y) exists exactly when g - x - y is factorizable."""
    m = find_perfect_matching(g) if m is None else frozenset(m)
    out = []
    for x, y in combinations(g.sorted_vertices(), 2):
        p = saturated_path(g, m, x, y)
        expected = factorizable_bruteforce(g, (x, y))
        if (p is not None) != expected:
            out.append(f"saturated path between {x} and {y}: found={p is not None}, expected={expected}")
        elif p is not None:
            if classify(p.vertices, g, m).kind is not Kind.SATURATED or {p.start, p.end} != {x, y}:
                out.append(f"path {p.vertices} is not saturated between {x} and {y}")
    return out


def tpath_cases(d: CanonicalDecomposition):
    """Every (component, variant, x, y) for which a path construction is guaranteed."""
    for h in d.ids:
        classes = d.classes[h]
        tower = sorted(d.vupstar(h))
        for x in tower:
            yield h, "i", x, None
        for s, t in permutations(classes, 2):
            for x in sorted(s):
                for y in sorted(t):
                    yield h, "ii", x, y
        for s in classes:
            coup = sorted(d.up_sets(h, s)[2])
            for x in sorted(s):
                for y in coup:
                    yield h, "iii", x, y
        for x in tower:
            for y in tower:
                if d.class_above(h, x) != d.class_above(h, y):
                    yield h, "iv", x, y


def check_tpaths(g: Graph, d: CanonicalDecomposition, m=None) -> tuple[int, list[str]]:
    """Run every applicable path construction; returns (cases run, violations)."""
    m = find_perfect_matching(g) if m is None else frozenset(m)
    out = []
    count = 0
    for h, variant, x, y in tpath_cases(d):
        count += 1
        try:
            p = tpath_construct(g, m, d, h, variant, x, y)
        except ProofClaimError as exc:
            out.append(f"{CLAIM_PREFIX}variant {variant} on {h} from {x} to {y}: {exc}")
            continue
        out.extend(_tpath_violations(g, m, d, h, variant, x, y, p))
    return count, out


def _tpath_violations(g, m, d, h, variant, x, y, p) -> list[str]:
    c = classify(p.vertices, g, m)
    s = d.class_above(h, x)
    star_s, up_s, _ = d.up_sets(h, s)
    tower = d.vupstar(h)
    where = f"variant {variant} on {h} from {x}"
    if variant == "i":
        end = p.end
        ok = end in s and set(p.vertices[:-1]) <= up_s and p.start == x
        ok = ok and (c.kind is Kind.TRIVIAL if x == end else (c.kind, c.source, c.target) == (Kind.BALANCED, x, end))
        return [] if ok else [f"{where}: {p.vertices} breaks kind or confinement"]
    if variant == "ii":
        conf = tower - up_s - d.up_sets(h, d.class_above(h, y))[1]
    elif variant == "iii":
        conf = tower - up_s
    else:
        conf = tower
    ok = c.kind is Kind.SATURATED and (p.start, p.end) == (x, y) and set(p.vertices) <= conf
    return [] if ok else [f"{where} to {y}: {p.vertices} breaks kind or confinement"]


def check_tower_ears(g: Graph, d: CanonicalDecomposition, m=None) -> tuple[int, list[str]]:
    """No non-trivial M-ear relative to any tower; returns (towers searched, violations)."""
    m = find_perfect_matching(g) if m is None else frozenset(m)
    out = []
    for h in d.ids:
        for ear in iter_ears(g, m, d.vupstar(h)):
            out.append(f"non-trivial ear {ear.vertices} relative to the tower over {h}")
            break
    return len(d.components), out


def run_all(g: Graph) -> dict[str, list[str]]:
    """Every decomposition invariant against the oracles; name -> violations."""
    d = decompose(g)
    m = find_perfect_matching(g)
    return {
        "allowed-edges": check_allowed_edges(g),
        "factor-components": check_components(g, d),
        "partial-order": check_order(g, d),
        "kotzig-lovasz": check_classes(g, d),
        "tagging": check_tags(g, d),
        "saturated-paths": check_saturated_paths(g, m),
        "path-constructions": check_tpaths(g, d, m)[1],
        "tower-ears": check_tower_ears(g, d, m)[1],
    }
