"""Homogeneity: every codeword sees an isomorphic neighbourhood.

Adding a period does not change the neighbourhood, so one word per kernel
coset is enough at length 15.  At length 31 a known period subgroup plays
the same role, topped up with random samples.
"""

import time

from perfcodes import is_homogeneous, named_code

for name in ("V22_1", "V3_11", "V22_1_doubled"):
    t0 = time.perf_counter()
    rep = is_homogeneous(named_code(name), name, extra_samples=50 if name.endswith("doubled") else 0)
    print(f"{name:>14}: homogeneous={rep.homogeneous}  ({time.perf_counter() - t0:.1f}s)")
    print(" " * 16 + rep.method_notes[0])
