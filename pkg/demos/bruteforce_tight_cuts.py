"""Brute-force tight cuts: bricks only have the trivial ones, other graphs may not.

Run: python3 demos/bruteforce_tight_cuts.py
"""

from tightcut.matching import is_brick
from tightcut.testkit import catalog, star_shores, tight_cuts_bruteforce

for name, g in catalog().items():
    if len(g) % 2:
        continue
    cuts = tight_cuts_bruteforce(g)
    extra = [sorted(c) for c in cuts if c not in star_shores(g)]
    kind = "brick" if len(g) >= 4 and is_brick(g) else "not a brick"
    print(f"{name:9s} {kind:12s} {len(cuts):3d} tight cuts, non-trivial: {extra or 'none'}")
