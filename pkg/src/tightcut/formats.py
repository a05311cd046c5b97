"""Graph files, matching arguments, decomposition reports and DOT output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .canonical import CanonicalDecomposition
from .errors import GraphInputError, PreconditionError
from .graph import Graph
from .matching import is_perfect
from .towers import borders


def parse_graph(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v" (1-based ids; '#' lines and blanks skipped)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno) from None
        rows.append((lineno, a, b))
    if not rows:
        raise GraphInputError("missing header line 'n m'")
    (hline, n, m), edges = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise GraphInputError("vertex and edge counts must be non-negative", hline)
    if len(edges) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(edges)}", hline)
    pairs = []
    for lineno, a, b in edges:
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphInputError(f"vertex id out of range 1..{n}", lineno)
        if a == b:
            raise GraphInputError(f"loop at vertex {a}", lineno)
        pairs.append((a, b))
    return Graph.from_edges(pairs, range(1, n + 1))


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def format_graph(g: Graph) -> str:
    """Inverse of parse_graph for graphs on vertices 1..n."""
    n = max(g.vertices, default=0)
    if g.vertices != frozenset(range(1, n + 1)):
        raise PreconditionError("graph files need vertex ids 1..n")
    lines = [f"{n} {len(g.edges)}"]
    lines += [f"{a} {b}" for a, b in g.edges.values()]
    return "\n".join(lines) + "\n"


def parse_vertex_list(text: str) -> frozenset:
    try:
        return frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise GraphInputError(f"malformed vertex list {text!r}") from None


def parse_matching(g: Graph, text: str) -> frozenset:
    """Matching written as "u-v,x-y"; must be a perfect matching of g."""
    out = set()
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            a, b = (int(x) for x in item.split("-"))
        except ValueError:
            raise GraphInputError(f"malformed matching edge {item!r}") from None
        if a not in g or b not in g:
            raise PreconditionError(f"matching edge {item} uses an unknown vertex")
        eid = g.edge_between(a, b)
        if eid is None:
            raise PreconditionError(f"matching edge {item} is not an edge of the graph")
        out.add(eid)
    if not is_perfect(g, out):
        raise PreconditionError("given matching is not a perfect matching")
    return frozenset(out)


def matching_pairs(g: Graph, m) -> list[list[int]]:
    return sorted(list(g.endpoints(e)) for e in m)


def _sorted(xs) -> tuple[int, ...]:
    return tuple(sorted(xs))


@dataclass(frozen=True)
class DecompositionReport:
    components: tuple[tuple[int, ...], ...]
    order: tuple[tuple[int, int], ...]
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    tags: tuple[tuple[tuple[tuple[int, ...], tuple[int, ...]], ...], ...]
    borders: tuple[tuple[int, tuple[int, ...] | None], ...]
    towers: tuple[tuple[int, ...], ...]

    @classmethod
    def from_decomposition(cls, d: CanonicalDecomposition) -> "DecompositionReport":
        tags = []
        for h in d.ids:
            items = sorted((_sorted(k), _sorted(s)) for k, s in d.tags(h).items())
            tags.append(tuple(items))
        bs = sorted((h, None if p is None else _sorted(p)) for h, p in borders(d.graph, d))
        return cls(
            components=tuple(_sorted(c) for c in d.components),
            order=tuple(d.strict_pairs()),
            classes=tuple(tuple(_sorted(s) for s in cls_) for cls_ in d.classes),
            tags=tuple(tags),
            borders=tuple(bs),
            towers=tuple(_sorted(d.vupstar(h)) for h in d.ids),
        )

    def to_dict(self) -> dict:
        return {
            "components": [{"id": i, "vertices": list(c)} for i, c in enumerate(self.components)],
            "order": [list(p) for p in self.order],
            "classes": [[list(s) for s in cs] for cs in self.classes],
            "tags": [[{"upper": list(k), "class": list(s)} for k, s in ts] for ts in self.tags],
            "borders": [{"component": h, "port": None if p is None else list(p)} for h, p in self.borders],
            "towers": [{"base": i, "vertices": list(t)} for i, t in enumerate(self.towers)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DecompositionReport":
        comps = sorted(data["components"], key=lambda c: c["id"])
        towers = sorted(data["towers"], key=lambda t: t["base"])
        return cls(
            components=tuple(tuple(c["vertices"]) for c in comps),
            order=tuple(tuple(p) for p in data["order"]),
            classes=tuple(tuple(tuple(s) for s in cs) for cs in data["classes"]),
            tags=tuple(tuple((tuple(t["upper"]), tuple(t["class"])) for t in ts) for ts in data["tags"]),
            borders=tuple((b["component"], None if b["port"] is None else tuple(b["port"]))
                          for b in data["borders"]),
            towers=tuple(tuple(t["vertices"]) for t in towers),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "DecompositionReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        for i, c in enumerate(self.components):
            classes = " ".join("{" + ",".join(map(str, s)) + "}" for s in self.classes[i])
            lines.append(f"component {i}: {list(c)}  classes: {classes}")
        if self.order:
            lines.append("order: " + ", ".join(f"{a} < {b}" for a, b in self.order))
        else:
            lines.append("order: (antichain)")
        for i, ts in enumerate(self.tags):
            for k, s in ts:
                lines.append(f"tag over {i}: {list(k)} -> {list(s)}")
        for h, p in self.borders:
            lines.append(f"border: {h} port {'none' if p is None else list(p)}")
        return "\n".join(lines) + "\n"


def to_dot(g: Graph, d: CanonicalDecomposition) -> str:
    """Components as clusters, graph edges undirected, strict order as directed cluster edges."""
    out = ["digraph decomposition {", "  compound=true;", "  node [shape=circle];"]
    for i, comp in enumerate(d.components):
        out.append(f"  subgraph cluster_{i} {{")
        out.append(f'    label="H{i}";')
        for v in sorted(comp):
            out.append(f"    {v};")
        out.append("  }")
    for a, b in g.edges.values():
        out.append(f"  {a} -> {b} [dir=none, color=gray];")
    for a, b in d.strict_pairs():
        ra, rb = min(d.components[a]), min(d.components[b])
        out.append(f"  {ra} -> {rb} [ltail=cluster_{a}, lhead=cluster_{b}, style=bold, color=blue];")
    out.append("}")
    return "\n".join(out) + "\n"
