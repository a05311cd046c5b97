"""Towers, t-adjacency, borders and arcs on a graph with several minimal components.

Run: python3 demos/towers_and_arcs.py
"""

from tightcut.altpaths import classify
from tightcut.canonical import decompose
from tightcut.graph import Graph
from tightcut.matching import find_perfect_matching
from tightcut.towers import arc_from_sequence, borders, sequence_between, spanning_arc_through, t_adjacency

# Three 4-cycles with a chord, strung in a row by single edges: 2-5 and 6-9.
blocks = [(1, 2, 3, 4), (5, 6, 7, 8), (9, 10, 11, 12)]
pairs = []
for a, b, c, e in blocks:
    pairs += [(a, b), (b, c), (c, e), (e, a), (a, c)]
pairs += [(2, 5), (6, 9)]
g = Graph.from_edges(pairs)
m = find_perfect_matching(g)
d = decompose(g)

print("components:", [sorted(c) for c in d.components])
print("minimal:   ", d.minimal())
for h1, s1, h2, s2 in sorted(t_adjacency(g, d), key=lambda t: (t[0], t[2])):
    print(f"t-adjacent: H{h1} via {sorted(s1)} and H{h2} via {sorted(s2)}")
bs = sorted(borders(g, d), key=lambda b: b[0])
print("borders:   ", [(h, sorted(p) if p else None) for h, p in bs])

# %% a spanning arc through the middle component
arc = spanning_arc_through(g, m, d, 1)
print("spanning arc through H1:", arc.vertices, classify(arc.vertices, g, m))

# %% the shortest tower-sequence between the two ends, and its arc
ends = [h for h, _ in bs]
seq = sequence_between(d, ends[:1], ends[1:])
print("tower-sequence:", seq.bases)
print("its arc:       ", arc_from_sequence(g, m, d, seq).vertices)
