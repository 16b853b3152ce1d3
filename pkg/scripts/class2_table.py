"""Abelianization and Gamma_2/Gamma_3 for every registry family over a range of n."""

import argparse
import time

from vsgroups.lcs import abelianization, gamma2_mod_gamma3
from vsgroups.presentations import REGISTRY, build_presentation

ap = argparse.ArgumentParser()
ap.add_argument("--max-n", type=int, default=5)
args = ap.parse_args()

print(f"{'family':8} {'n':>2}  {'abelianization':22} {'gamma2/gamma3':18} secs")
for fam in REGISTRY:
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        P = build_presentation(fam, n)
        ab, g2 = abelianization(P), gamma2_mod_gamma3(P)
        print(f"{fam:8} {n:>2}  {str(ab):22} {str(g2):18} {time.perf_counter() - t0:.2f}")
