"""
Which relators move which exponent sums. For every registry family and relator
tag, apply each relator to the empty word and report the change in
(expC, expS, expCS, parity).
"""

from collections import defaultdict

from vsgroups.homs import exponent_sums
from vsgroups.presentations import REGISTRY, build_presentation

N = 4
for fam in REGISTRY:
    moved = defaultdict(set)
    for r in build_presentation(fam, N).relators:
        d = exponent_sums(r.word)
        delta = (d.exp_c, d.exp_s, d.exp_cs, d.parity)
        if any(delta):
            moved[r.tag].add(delta)
    status = "invariant" if not moved else "; ".join(f"{tag}: {sorted(v)}" for tag, v in sorted(moved.items()))
    print(f"{fam:6} {status}")
