"""Fat matchings for every cut of a few bricks, with the case trace of each.

Run: python3 demos/witness.py
"""

from collections import Counter

from tightcut.engine import fat_witness
from tightcut.graph import Graph
from tightcut.matching import crossing_edges
from tightcut.testkit import CATALOG_BRICKS, canonical_shores, catalog, enumerate_perfect_matchings

cat = catalog()

# %% the prism, shore {1,2,3}: the starting matching uses a single rung
g = cat["PRISM"]
m = frozenset(g.edge_between(a, b) for a, b in [(1, 2), (3, 6), (4, 5)])
w = fat_witness(g, {1, 2, 3}, m)
print("trace:  ", w.trace)
print("circuit:", w.circuit)
print("output: ", sorted(g.endpoints(e) for e in w.output_matching), "crossing", w.crossing)

# %% how often each branch fires over every shore and matching of the catalog bricks
traces = Counter()
for name in CATALOG_BRICKS:
    b = cat[name]
    for shore in canonical_shores(b, 2, len(b) - 2):
        for pm in enumerate_perfect_matchings(b):
            w = fat_witness(b, shore, pm)
            assert len(crossing_edges(b, w.output_matching, shore)) >= 2
            traces[w.trace[-1]] += 1
print(dict(traces))

# %% a brick where the deeper case analysis is needed
edges = [(1, 6), (1, 3), (1, 2), (2, 7), (2, 6), (2, 4), (3, 7), (3, 6), (3, 5), (3, 8), (4, 5), (4, 6),
         (5, 7), (5, 6), (6, 7), (6, 8), (7, 8)]
h = Graph.from_edges(edges)
pm = frozenset(h.edge_between(a, b) for a, b in [(1, 2), (3, 6), (4, 5), (7, 8)])
w = fat_witness(h, {1, 2, 3, 7, 8}, pm)
print("trace:", w.trace, "circuit:", w.circuit, "crossing:", w.crossing)
