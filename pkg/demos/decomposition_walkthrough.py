"""Canonical decomposition of a small factorizable graph, step by step.

Run: python3 demos/decomposition_walkthrough.py
"""

from tightcut.canonical import decompose, tpath_construct
from tightcut.formats import DecompositionReport
from tightcut.graph import Graph
from tightcut.matching import allowed_edges, find_perfect_matching

# A triangle 1-3-4 with a pendant edge 1-2 (the "paw"), plus a second pendant
# pair 5-6 hanging off vertex 4.
g = Graph.from_edges([(1, 2), (1, 3), (1, 4), (3, 4), (4, 5), (5, 6)])
m = find_perfect_matching(g)
print("perfect matching:", sorted(g.endpoints(e) for e in m))
print("allowed edges:   ", sorted(g.endpoints(e) for e in allowed_edges(g)))

# %% factor-components are the components of the allowed-edge subgraph
d = decompose(g)
for i, comp in enumerate(d.components):
    print(f"H{i} = {sorted(comp)}  classes {[sorted(s) for s in d.classes[i]]}")

# %% the order: H_a <= H_b when some union containing both contracts nicely
for a, b in d.strict_pairs():
    print(f"H{a} < H{b}")
print("minimal:", d.minimal())

# %% towers and tags
for h in d.ids:
    print(f"tower over H{h}: {sorted(d.vupstar(h))}")
    for upper, cls in d.tags(h).items():
        print(f"   upper part {sorted(upper)} is tagged with class {sorted(cls)}")

# %% the path constructions inside the tower over H0
x = max(d.vupstar(0))
s = d.class_above(0, x)
p = tpath_construct(g, m, d, 0, "i", x)
print(f"balanced path from {x} down to class {sorted(s)}:", p.vertices)

# %% the same information as a report
print(DecompositionReport.from_decomposition(d).to_text())
